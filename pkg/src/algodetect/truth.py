"""Labeled ground truth: (algorithm, method_id) -> positive/negative."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from . import ALGORITHMS
from .corpus import MethodRecord, iter_jsonl
from .prompts import canonical_algorithm


class TruthError(ValueError):
    """Raised for malformed or inconsistent ground-truth files."""


@dataclass
class GroundTruth:
    entries: dict[tuple[str, str], str]  # (algorithm, method_id) -> label
    algorithms: list[str] = field(default_factory=lambda: list(ALGORITHMS))

    def labels_for(self, algorithm: str) -> dict[str, str]:
        return {
            method_id: label
            for (algo, method_id), label in self.entries.items()
            if algo == algorithm
        }

    def label(self, algorithm: str, method_id: str) -> str | None:
        return self.entries.get((algorithm, method_id))

    def counts(self, algorithm: str) -> tuple[int, int]:
        labels = self.labels_for(algorithm).values()
        positives = sum(1 for lab in labels if lab == "positive")
        return positives, len(labels) - positives

    def restrict(self, method_ids: set[str]) -> "GroundTruth":
        return GroundTruth(
            entries={k: v for k, v in self.entries.items() if k[1] in method_ids},
            algorithms=list(self.algorithms),
        )

    def method_ids(self) -> set[str]:
        return {method_id for _, method_id in self.entries}


def load_ground_truth(
    path: str | Path,
    corpus: list[MethodRecord] | None = None,
    algorithms: tuple[str, ...] = ALGORITHMS,
) -> GroundTruth:
    """Load JSONL rows {method_id, algorithm, label} and validate them."""
    entries: dict[tuple[str, str], str] = {}
    known = set(algorithms)
    for lineno, row in enumerate(iter_jsonl(path), start=1):
        try:
            method_id = row["method_id"]
            algorithm = canonical_algorithm(row["algorithm"])
            label = row["label"]
        except KeyError as exc:
            raise TruthError(f"{path}:{lineno}: missing field {exc}") from exc
        if algorithm not in known:
            raise TruthError(f"{path}:{lineno}: unknown algorithm name {row['algorithm']!r}")
        if label not in ("positive", "negative"):
            raise TruthError(f"{path}:{lineno}: label must be positive/negative, got {label!r}")
        key = (algorithm, method_id)
        if key in entries:
            raise TruthError(f"{path}:{lineno}: duplicate entry for {key}")
        entries[key] = label
    truth = GroundTruth(entries=entries, algorithms=list(algorithms))
    if corpus is not None:
        corpus_ids = {record.method_id for record in corpus}
        dangling = sorted(truth.method_ids() - corpus_ids)
        if dangling:
            raise TruthError(
                f"{path}: {len(dangling)} ground-truth method_ids missing from the corpus "
                f"(first: {dangling[0]})"
            )
    return truth
