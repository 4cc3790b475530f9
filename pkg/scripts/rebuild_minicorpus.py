#!/usr/bin/env python3
"""Regenerate the bundled mini corpus JSONL files from the Java fixtures.

Run from the repository root after editing files under
src/algodetect/data/minicorpus/java/. Ground-truth labels derive from the
fixture file names: <Algo>Positives.java / <Algo>Negatives.java.
"""

import json
import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from algodetect.corpus import extract_directory  # noqa: E402

FILE_ALGO = {
    "BubbleSort": "bubble_sort",
    "BinarySearch": "binary_search",
    "Gcd": "gcd",
    "Fibonacci": "fibonacci",
    "Palindrome": "palindrome",
    "PrimeFactors": "prime_factors",
    "Transpose": "transpose_matrix",
}


def main() -> int:
    root = Path(__file__).resolve().parents[1] / "src" / "algodetect" / "data" / "minicorpus"
    report = extract_directory(root / "java")
    if report.skipped_regions or report.rejected_files:
        print(f"fixture problems: skipped={report.skipped_regions} rejected={report.rejected_files}")
        return 1

    corpus_rows = []
    truth_rows = []
    for record in report.records:
        match = re.match(r"([A-Za-z]+?)(Positives|Negatives)\.java$", Path(record.file_path).name)
        if not match:
            print(f"unrecognized fixture file {record.file_path}")
            return 1
        algorithm = FILE_ALGO[match.group(1)]
        label = "positive" if match.group(2) == "Positives" else "negative"
        corpus_rows.append(record.to_json())
        truth_rows.append(
            {"method_id": record.method_id, "algorithm": algorithm, "label": label}
        )

    with (root / "methods.jsonl").open("w", encoding="utf-8") as handle:
        for row in corpus_rows:
            handle.write(json.dumps(row, ensure_ascii=False) + "\n")
    with (root / "truth.jsonl").open("w", encoding="utf-8") as handle:
        for row in truth_rows:
            handle.write(json.dumps(row, ensure_ascii=False) + "\n")
    print(f"wrote {len(corpus_rows)} methods")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
