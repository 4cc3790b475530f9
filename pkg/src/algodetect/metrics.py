"""Confusion matrices, precision/recall/F1 and score-threshold sweeps.

Conventions: 0/0 divisions resolve to 0 for precision, recall and F1;
macro-F1 is the unweighted mean of the per-algorithm F1 values; threshold
ties break toward the higher threshold. A method excluded by a filter is
predicted negative at every threshold. In lower-bound mode a prediction on
an unlabeled method counts as a false positive and unlabeled non-predictions
are ignored, making precision and F1 lower bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

SCORE_THRESHOLDS = (1, 2, 3, 4)


@dataclass
class RawResult:
    """One (algorithm, method) outcome from a pipeline run."""

    algorithm: str
    method_id: str
    label: Optional[str]  # positive | negative | None (unlabeled)
    excluded: bool = False
    pass_reason: str = ""
    raw_score: Optional[int] = None
    error: str = ""

    def predicted(self, threshold: int) -> bool:
        return not self.excluded and self.raw_score is not None and self.raw_score >= threshold

    def to_json(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "method_id": self.method_id,
            "label": self.label,
            "excluded": self.excluded,
            "pass_reason": self.pass_reason,
            "raw_score": self.raw_score,
            "error": self.error,
        }

    @classmethod
    def from_json(cls, row: dict) -> "RawResult":
        return cls(
            algorithm=row["algorithm"],
            method_id=row["method_id"],
            label=row.get("label"),
            excluded=bool(row.get("excluded", False)),
            pass_reason=row.get("pass_reason", ""),
            raw_score=row.get("raw_score"),
            error=row.get("error", ""),
        )


def precision(tp: int, fp: int) -> float:
    return tp / (tp + fp) if tp + fp else 0.0


def recall(tp: int, fn: int) -> float:
    return tp / (tp + fn) if tp + fn else 0.0


def f1_score(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r else 0.0


def macro_f1(per_algorithm_f1: Iterable[float]) -> float:
    values = list(per_algorithm_f1)
    return sum(values) / len(values) if values else 0.0


@dataclass
class AlgorithmMetrics:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    @property
    def precision(self) -> float:
        return precision(self.tp, self.fp)

    @property
    def recall(self) -> float:
        return recall(self.tp, self.fn)

    @property
    def f1(self) -> float:
        return f1_score(self.precision, self.recall)

    def to_json(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


@dataclass
class MetricsReport:
    algorithms: list[str]
    mode: str  # standard | lower_bound
    per_threshold: dict[int, dict[str, AlgorithmMetrics]]
    macro_f1: dict[int, float]
    best_threshold: int
    reduction_micro: float
    reduction_macro: float
    per_algorithm_reduction: dict[str, float]
    excluded_true_positives: dict[str, int]
    error_count: int = 0

    def to_json(self) -> dict:
        return {
            "algorithms": self.algorithms,
            "mode": self.mode,
            "per_threshold": {
                str(st): {alg: m.to_json() for alg, m in by_alg.items()}
                for st, by_alg in self.per_threshold.items()
            },
            "macro_f1": {str(st): v for st, v in self.macro_f1.items()},
            "best_threshold": self.best_threshold,
            "reduction_micro": self.reduction_micro,
            "reduction_macro": self.reduction_macro,
            "per_algorithm_reduction": self.per_algorithm_reduction,
            "excluded_true_positives": self.excluded_true_positives,
            "error_count": self.error_count,
        }

    @classmethod
    def from_json(cls, row: dict) -> "MetricsReport":
        per_threshold = {
            int(st): {
                alg: AlgorithmMetrics(tp=m["tp"], fp=m["fp"], fn=m["fn"], tn=m["tn"])
                for alg, m in by_alg.items()
            }
            for st, by_alg in row["per_threshold"].items()
        }
        return cls(
            algorithms=list(row["algorithms"]),
            mode=row["mode"],
            per_threshold=per_threshold,
            macro_f1={int(st): v for st, v in row["macro_f1"].items()},
            best_threshold=row["best_threshold"],
            reduction_micro=row["reduction_micro"],
            reduction_macro=row["reduction_macro"],
            per_algorithm_reduction=dict(row["per_algorithm_reduction"]),
            excluded_true_positives=dict(row["excluded_true_positives"]),
            error_count=row.get("error_count", 0),
        )


def confusion_at(
    rows: Iterable[RawResult], threshold: int, mode: str = "standard"
) -> AlgorithmMetrics:
    m = AlgorithmMetrics()
    for row in rows:
        predicted = row.predicted(threshold)
        if row.label is None:
            if mode == "lower_bound" and predicted:
                m.fp += 1
            continue
        actual = row.label == "positive"
        if predicted and actual:
            m.tp += 1
        elif predicted and not actual:
            m.fp += 1
        elif not predicted and actual:
            m.fn += 1
        else:
            m.tn += 1
    return m


def sweep_thresholds(
    results: list[RawResult],
    algorithms: Optional[list[str]] = None,
    mode: str = "standard",
) -> MetricsReport:
    """Metrics at every score threshold plus the best (tie -> higher ST)."""
    if mode not in ("standard", "lower_bound"):
        raise ValueError(f"unknown metrics mode {mode!r}")
    if algorithms is None:
        algorithms = sorted({row.algorithm for row in results})
    by_algorithm: dict[str, list[RawResult]] = {alg: [] for alg in algorithms}
    for row in results:
        by_algorithm.setdefault(row.algorithm, []).append(row)

    per_threshold: dict[int, dict[str, AlgorithmMetrics]] = {}
    macro: dict[int, float] = {}
    for st in SCORE_THRESHOLDS:
        per_threshold[st] = {
            alg: confusion_at(by_algorithm.get(alg, []), st, mode) for alg in algorithms
        }
        macro[st] = macro_f1(m.f1 for m in per_threshold[st].values())

    best = SCORE_THRESHOLDS[0]
    for st in SCORE_THRESHOLDS:
        if macro[st] >= macro[best]:
            best = st

    total = len(results)
    excluded_total = sum(1 for row in results if row.excluded)
    per_algorithm_reduction = {}
    for alg in algorithms:
        rows = by_algorithm.get(alg, [])
        per_algorithm_reduction[alg] = (
            sum(1 for row in rows if row.excluded) / len(rows) if rows else 0.0
        )
    excluded_tps = {
        alg: sum(1 for row in by_algorithm.get(alg, []) if row.excluded and row.label == "positive")
        for alg in algorithms
    }
    return MetricsReport(
        algorithms=list(algorithms),
        mode=mode,
        per_threshold=per_threshold,
        macro_f1=macro,
        best_threshold=best,
        reduction_micro=excluded_total / total if total else 0.0,
        reduction_macro=(
            sum(per_algorithm_reduction.values()) / len(per_algorithm_reduction)
            if per_algorithm_reduction
            else 0.0
        ),
        per_algorithm_reduction=per_algorithm_reduction,
        excluded_true_positives=excluded_tps,
        error_count=sum(1 for row in results if row.error),
    )


def lower_bound_mode(results: list[RawResult], algorithms: Optional[list[str]] = None) -> MetricsReport:
    """Sweep with the lower-bound precision convention."""
    return sweep_thresholds(results, algorithms, mode="lower_bound")
