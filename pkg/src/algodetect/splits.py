"""Test/validation splits with two-sample Kolmogorov-Smirnov validation.

Splits are stratified per algorithm over positives and negatives, then
validated for representativeness by comparing the AST-element-count
distributions of the two sides. The KS p-value uses the standard asymptotic
two-sample approximation; a small p only warns, it never fails the split.
"""

from __future__ import annotations

import json
import logging
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .corpus import MethodRecord
from .truth import GroundTruth

logger = logging.getLogger(__name__)


class SplitError(ValueError):
    """Raised when a valid stratified split cannot be built."""


def ks_statistic(sample_a, sample_b) -> float:
    """Two-sample KS statistic: sup_x |F_a(x) - F_b(x)| over the empirical CDFs."""
    a = np.sort(np.asarray(sample_a, dtype=float))
    b = np.sort(np.asarray(sample_b, dtype=float))
    if a.size == 0 or b.size == 0:
        raise SplitError("KS statistic needs non-empty samples")
    grid = np.concatenate([a, b])
    cdf_a = np.searchsorted(a, grid, side="right") / a.size
    cdf_b = np.searchsorted(b, grid, side="right") / b.size
    return float(np.max(np.abs(cdf_a - cdf_b)))


def ks_pvalue(d: float, n_a: int, n_b: int) -> float:
    """Asymptotic two-sided p-value for the two-sample KS statistic
    (Kolmogorov distribution with the small-sample correction factor)."""
    if n_a == 0 or n_b == 0:
        raise SplitError("KS p-value needs non-empty samples")
    en = math.sqrt(n_a * n_b / (n_a + n_b))
    lam = (en + 0.12 + 0.11 / en) * d
    if lam <= 0:
        return 1.0
    total = 0.0
    for k in range(1, 101):
        term = 2.0 * (-1.0) ** (k - 1) * math.exp(-2.0 * k * k * lam * lam)
        total += term
        if abs(term) < 1e-12:
            break
    return max(0.0, min(1.0, total))


def ks_two_sample(sample_a, sample_b) -> tuple[float, float]:
    d = ks_statistic(sample_a, sample_b)
    return d, ks_pvalue(d, len(sample_a), len(sample_b))


@dataclass
class SplitSpec:
    ratio: float
    seed: int
    assignment: dict[str, str]  # method_id -> "test" | "validation"
    ks_statistic: float
    ks_p_value: float

    def side(self, method_id: str) -> str | None:
        return self.assignment.get(method_id)

    def to_json(self) -> dict:
        return {
            "ratio": self.ratio,
            "seed": self.seed,
            "assignment": self.assignment,
            "ks": {"statistic": self.ks_statistic, "p_value": self.ks_p_value},
        }

    @classmethod
    def from_json(cls, row: dict) -> "SplitSpec":
        return cls(
            ratio=row["ratio"],
            seed=row["seed"],
            assignment=dict(row["assignment"]),
            ks_statistic=row["ks"]["statistic"],
            ks_p_value=row["ks"]["p_value"],
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2, sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "SplitSpec":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def make_split(
    corpus: list[MethodRecord],
    truth: GroundTruth,
    ratio: float = 0.70,
    seed: int = 0,
) -> SplitSpec:
    """Stratified test/validation assignment (test fraction = ratio).

    Every (algorithm, label) stratum lands within one method of the ratio.
    Methods labeled under several algorithms keep a single assignment; the
    later strata balance around it.
    """
    if not 0.0 < ratio < 1.0:
        raise SplitError(f"ratio must be in (0, 1), got {ratio}")
    by_id = {record.method_id: record for record in corpus}
    assignment: dict[str, str] = {}
    for algorithm in sorted(truth.algorithms):
        labels = truth.labels_for(algorithm)
        if not labels:
            continue
        positives = sum(1 for lab in labels.values() if lab == "positive")
        if positives < 2:
            raise SplitError(f"{algorithm}: needs at least 2 positives to stratify, has {positives}")
        for label in ("positive", "negative"):
            ids = sorted(mid for mid, lab in labels.items() if lab == label)
            if not ids:
                continue
            rng = random.Random(f"{seed}:{algorithm}:{label}")
            rng.shuffle(ids)
            target_test = round(ratio * len(ids))
            in_test = sum(1 for mid in ids if assignment.get(mid) == "test")
            for mid in ids:
                if mid in assignment:
                    continue
                if in_test < target_test:
                    assignment[mid] = "test"
                    in_test += 1
                else:
                    assignment[mid] = "validation"

    test_counts = [
        by_id[mid].ast_element_count for mid, side in assignment.items() if side == "test" and mid in by_id
    ]
    val_counts = [
        by_id[mid].ast_element_count
        for mid, side in assignment.items()
        if side == "validation" and mid in by_id
    ]
    d, p = ks_two_sample(test_counts, val_counts)
    if p < 0.05:
        logger.warning(
            "split may not be representative: KS D=%.4f p=%.4f on AST element counts", d, p
        )
    return SplitSpec(ratio=ratio, seed=seed, assignment=assignment, ks_statistic=d, ks_p_value=p)


@dataclass
class ReducedDataset:
    records: list[MethodRecord]
    truth: GroundTruth
    ks_statistic: float
    ks_p_value: float
    dropped: dict[str, int] = field(default_factory=dict)


def reduced_dataset(
    corpus: list[MethodRecord],
    truth: GroundTruth,
    keep_fraction: float = 0.10,
    algorithms_to_thin: tuple[str, ...] = ("bubble_sort", "binary_search"),
    seed: int = 0,
) -> ReducedDataset:
    """Thin the negatives of runtime-dominating algorithms.

    Positives are always retained; negatives of each thinned algorithm are
    subsampled to floor(keep_fraction * n) with a seeded draw. KS validation
    compares AST element counts of the reduced corpus against the full one.
    """
    if not 0.0 < keep_fraction <= 1.0:
        raise SplitError(f"keep_fraction must be in (0, 1], got {keep_fraction}")
    drop: set[str] = set()
    dropped_counts: dict[str, int] = {}
    for algorithm in algorithms_to_thin:
        negatives = sorted(
            mid for mid, lab in truth.labels_for(algorithm).items() if lab == "negative"
        )
        keep_n = int(len(negatives) * keep_fraction)
        rng = random.Random(f"{seed}:{algorithm}")
        kept = set(rng.sample(negatives, keep_n)) if keep_n < len(negatives) else set(negatives)
        algorithm_drop = set(negatives) - kept
        # A method positive for any algorithm is never dropped.
        positives_anywhere = {
            mid for (algo, mid), lab in truth.entries.items() if lab == "positive"
        }
        algorithm_drop -= positives_anywhere
        dropped_counts[algorithm] = len(algorithm_drop)
        drop |= algorithm_drop
    records = [record for record in corpus if record.method_id not in drop]
    surviving = {record.method_id for record in records}
    new_truth = truth.restrict(surviving)
    full_counts = [record.ast_element_count for record in corpus]
    reduced_counts = [record.ast_element_count for record in records]
    d, p = ks_two_sample(full_counts, reduced_counts)
    if p < 0.05:
        logger.warning("reduced dataset drifts from the full one: KS D=%.4f p=%.4f", d, p)
    return ReducedDataset(
        records=records, truth=new_truth, ks_statistic=d, ks_p_value=p, dropped=dropped_counts
    )
