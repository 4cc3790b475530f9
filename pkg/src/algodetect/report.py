"""Report writers: CSV with a JSON mirror, byte-stable across reruns."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from .metrics import SCORE_THRESHOLDS, MetricsReport

CSV_COLUMNS = [
    "filter",
    "style",
    "backend",
    "algorithm",
    "ST",
    "precision",
    "recall",
    "f1",
    "macro_f1",
    "reduction_micro",
    "reduction_macro",
    "excluded_TPs",
]


@dataclass
class RunContext:
    filter: str = "none"
    style: str = "score"
    backend: str = "mock"

    def to_json(self) -> dict:
        return {"filter": self.filter, "style": self.style, "backend": self.backend}


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def report_rows(report: MetricsReport, context: RunContext) -> list[dict]:
    rows = []
    for algorithm in sorted(report.algorithms):
        for st in SCORE_THRESHOLDS:
            m = report.per_threshold[st][algorithm]
            rows.append(
                {
                    "filter": context.filter,
                    "style": context.style,
                    "backend": context.backend,
                    "algorithm": algorithm,
                    "ST": st,
                    "precision": _fmt(m.precision),
                    "recall": _fmt(m.recall),
                    "f1": _fmt(m.f1),
                    "macro_f1": _fmt(report.macro_f1[st]),
                    "reduction_micro": _fmt(report.reduction_micro),
                    "reduction_macro": _fmt(report.reduction_macro),
                    "excluded_TPs": report.excluded_true_positives.get(algorithm, 0),
                }
            )
    return rows


def write_report(
    report: MetricsReport | None,
    context: RunContext,
    out_dir: str | Path,
    basename: str = "report",
) -> tuple[Path, Path]:
    """Write <basename>.csv and <basename>.json; returns both paths.

    A None report writes a header-only CSV and an empty JSON mirror.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{basename}.csv"
    json_path = out_dir / f"{basename}.json"
    with csv_path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        if report is not None:
            for row in report_rows(report, context):
                writer.writerow(row)
    payload = {"context": context.to_json(), "report": report.to_json() if report else None}
    json_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return csv_path, json_path


def load_report(json_path: str | Path) -> tuple[MetricsReport | None, RunContext]:
    payload = json.loads(Path(json_path).read_text(encoding="utf-8"))
    ctx_row = payload.get("context", {})
    context = RunContext(
        filter=ctx_row.get("filter", "none"),
        style=ctx_row.get("style", "score"),
        backend=ctx_row.get("backend", "mock"),
    )
    body = payload.get("report")
    return (MetricsReport.from_json(body) if body else None), context
