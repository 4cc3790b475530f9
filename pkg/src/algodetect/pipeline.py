"""End-to-end runs: filter -> LLM classification -> raw results.

A method excluded by the filter is assigned the negative class outright and
never reaches the backend; everything else is classified and scored. Raw
results are one row per (algorithm, method) and are sufficient to recompute
every report quantity offline.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import keywords as kw
from . import structural as st
from .backends import Backend
from .classify import BatchResult, VerdictCache, run_batch
from .corpus import MethodRecord, iter_jsonl, write_jsonl
from .metrics import RawResult
from .prompts import ExampleLibrary, make_style
from .splits import SplitSpec
from .truth import GroundTruth


@dataclass
class FilterSpec:
    """Which pre-filter to run: kind in {none, keyword, structural}."""

    kind: str = "none"
    keyword_patterns: Optional[dict[str, kw.KeywordPattern]] = None
    structural_patterns: Optional[dict[str, st.StructuralPattern]] = None

    def __post_init__(self):
        if self.kind not in ("none", "keyword", "structural"):
            raise ValueError(f"unknown filter kind {self.kind!r}")
        if self.kind == "keyword" and not self.keyword_patterns:
            raise ValueError("keyword filter needs patterns")
        if self.kind == "structural" and not self.structural_patterns:
            raise ValueError("structural filter needs patterns")

    def split(self, algorithm: str, records: list[MethodRecord]):
        """(passed, excluded_rows_reasons) for one algorithm."""
        if self.kind == "none":
            return records, []
        if self.kind == "keyword":
            pattern = self.keyword_patterns.get(algorithm)
            if pattern is None:
                raise ValueError(f"no keyword pattern for algorithm {algorithm!r}")
            passed, excluded = [], []
            for record in records:
                if kw.evaluate(pattern, record).passed:
                    passed.append(record)
                else:
                    excluded.append((record, ""))
            return passed, excluded
        pattern = self.structural_patterns.get(algorithm)
        if pattern is None:
            raise ValueError(f"no structural pattern for algorithm {algorithm!r}")
        passed, excluded = [], []
        for record in records:
            decision = st.decide(pattern, record)
            if decision.passed:
                passed.append(record)
            else:
                excluded.append((record, decision.pass_reason))
        return passed, excluded


def run_pipeline(
    corpus: list[MethodRecord],
    truth: GroundTruth,
    filter_spec: FilterSpec,
    style_spec: str,
    backend: Backend,
    mode: str = "standard",
    library: Optional[ExampleLibrary] = None,
    negative_kind: str = "similar",
    split: Optional[SplitSpec] = None,
    split_side: str = "all",
    parallelism: int = 1,
    cache: Optional[VerdictCache] = None,
    retries: int = 2,
    backoff: float = 0.5,
    lenient: bool = True,
) -> list[RawResult]:
    """Run filter + classification for every algorithm in the ground truth."""
    if mode not in ("standard", "lower_bound"):
        raise ValueError(f"unknown pipeline mode {mode!r}")
    if split_side not in ("test", "validation", "all"):
        raise ValueError(f"unknown split side {split_side!r}")

    def in_split(method_id: str) -> bool:
        if split is None or split_side == "all":
            return True
        return split.side(method_id) == split_side

    results: list[RawResult] = []
    for algorithm in truth.algorithms:
        labels = truth.labels_for(algorithm)
        if mode == "standard":
            universe = [rec for rec in corpus if rec.method_id in labels]
        else:
            universe = list(corpus)
        universe = [rec for rec in universe if in_split(rec.method_id)]
        if not universe:
            continue
        passed, excluded = filter_spec.split(algorithm, universe)
        for record, reason in excluded:
            results.append(
                RawResult(
                    algorithm=algorithm,
                    method_id=record.method_id,
                    label=labels.get(record.method_id),
                    excluded=True,
                    pass_reason=reason,
                )
            )
        if passed:
            style = make_style(style_spec, library=library, algorithm=algorithm,
                               negative_kind=negative_kind)
            batch: BatchResult = run_batch(
                style,
                algorithm,
                passed,
                backend,
                parallelism=parallelism,
                cache=cache,
                retries=retries,
                backoff=backoff,
                lenient=lenient,
            )
            by_id = {v.method_id: v for v in batch.verdicts}
            error_by_id = {e.method_id: e for e in batch.errors}
            for record in passed:
                verdict = by_id.get(record.method_id)
                if verdict is not None:
                    results.append(
                        RawResult(
                            algorithm=algorithm,
                            method_id=record.method_id,
                            label=labels.get(record.method_id),
                            raw_score=verdict.raw_score,
                        )
                    )
                else:
                    err = error_by_id.get(record.method_id)
                    results.append(
                        RawResult(
                            algorithm=algorithm,
                            method_id=record.method_id,
                            label=labels.get(record.method_id),
                            error=err.message if err else "missing verdict",
                        )
                    )
    return results


def save_results(results: list[RawResult], path: str | Path) -> None:
    write_jsonl((row.to_json() for row in results), path)


def load_results(path: str | Path) -> list[RawResult]:
    return [RawResult.from_json(row) for row in iter_jsonl(path)]
