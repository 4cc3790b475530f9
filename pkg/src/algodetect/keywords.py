"""Keyword-group regex filters over method source text.

A pattern holds one or more groups of case-insensitive regexes with a hit
threshold: a group is satisfied when at least ``threshold`` DISTINCT regexes
match the method text (a regex matching five times still counts once). Plain
alphanumeric keywords are word-boundary anchored at compile time so that
"i" does not hit inside "insert"; regexes carrying metacharacters (e.g.
``low.*high``) compile verbatim. Matching runs on the full method text:
signature, body and comments.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import MethodRecord

_PLAIN_WORD = re.compile(r"^[A-Za-z0-9]+$")


class PatternError(ValueError):
    """Raised when a pattern file is malformed."""


@dataclass
class KeywordGroup:
    regexes: list[str]
    threshold: int
    compiled: list[re.Pattern] = field(default_factory=list, repr=False)

    def hit_count(self, text: str) -> int:
        return sum(1 for rx in self.compiled if rx.search(text))

    def satisfied(self, text: str) -> bool:
        return self.hit_count(text) >= self.threshold


@dataclass
class KeywordPattern:
    algorithm: str
    family: str
    combinator: str  # any_of | all_of
    groups: list[KeywordGroup]
    reconstructed: bool = False


@dataclass
class KeywordDecision:
    method_id: str
    passed: bool
    group_hits: list[int]


# camelCase-aware word boundary: a case hump counts as a boundary, so
# "bubble" and "sort" both hit inside "bubbleSort" while "i" still never
# hits inside "insert".
_LEFT_BOUND = r"(?:(?<![A-Za-z0-9])|(?<=[a-z])(?=[A-Z]))"
_RIGHT_BOUND = r"(?:(?![A-Za-z0-9])|(?<=[a-z])(?=[A-Z]))"


def compile_regex(raw: str) -> re.Pattern:
    """Compile one keyword regex with the anchoring convention.

    Plain alphanumeric keywords get camel-aware word boundaries; anything
    with metacharacters compiles verbatim. DOTALL lets co-occurrence regexes
    like ``low.*high`` span lines, which multi-line method bodies require.
    """
    if _PLAIN_WORD.match(raw):
        # Case-insensitivity is spelled out per letter: the IGNORECASE flag
        # would case-fold the boundary lookarounds and break camel detection.
        word = "".join(f"[{c.lower()}{c.upper()}]" if c.isalpha() else c for c in raw)
        return re.compile(f"{_LEFT_BOUND}{word}{_RIGHT_BOUND}", re.DOTALL)
    return re.compile(raw, re.IGNORECASE | re.DOTALL)


def compile_pattern(spec: dict) -> KeywordPattern:
    """Build a KeywordPattern from one pattern-file entry."""
    try:
        algorithm = spec["algorithm"]
        raw_groups = spec["groups"]
    except KeyError as exc:
        raise PatternError(f"keyword pattern missing field {exc}") from exc
    if not raw_groups:
        raise PatternError(f"{algorithm}: pattern needs at least one group")
    combinator = spec.get("combinator", "any_of")
    if combinator not in ("any_of", "all_of"):
        raise PatternError(f"{algorithm}: unknown combinator {combinator!r}")
    groups = []
    for gi, raw in enumerate(raw_groups):
        regexes = raw.get("regexes", [])
        threshold = raw.get("threshold", 1)
        if not regexes:
            raise PatternError(f"{algorithm}: group {gi} has no regexes")
        if not 1 <= threshold <= len(regexes):
            raise PatternError(
                f"{algorithm}: group {gi} threshold {threshold} out of range 1..{len(regexes)}"
            )
        compiled = []
        for rx in regexes:
            try:
                compiled.append(compile_regex(rx))
            except re.error as exc:
                raise PatternError(f"{algorithm}: invalid regex {rx!r}: {exc}") from exc
        groups.append(KeywordGroup(list(regexes), threshold, compiled))
    return KeywordPattern(
        algorithm=algorithm,
        family=spec.get("family", "recall_focused"),
        combinator=combinator,
        groups=groups,
        reconstructed=bool(spec.get("reconstructed", False)),
    )


def load_pattern_file(path: str | Path) -> KeywordPattern:
    path = Path(path)
    try:
        spec = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise PatternError(f"{path}: invalid JSON: {exc}") from exc
    return compile_pattern(spec)


def load_pattern_dir(path: str | Path) -> dict[str, KeywordPattern]:
    """Load every *.json pattern under a directory, keyed by algorithm."""
    patterns = {}
    for file in sorted(Path(path).glob("*.json")):
        pat = load_pattern_file(file)
        patterns[pat.algorithm] = pat
    if not patterns:
        raise PatternError(f"no keyword pattern files under {path}")
    return patterns


def evaluate(pattern: KeywordPattern, record: MethodRecord) -> KeywordDecision:
    """Pass/exclude one method, with per-group distinct-regex hit counts."""
    text = record.source
    hits = [group.hit_count(text) for group in pattern.groups]
    satisfied = [h >= g.threshold for h, g in zip(hits, pattern.groups)]
    passed = all(satisfied) if pattern.combinator == "all_of" else any(satisfied)
    return KeywordDecision(record.method_id, passed, hits)


def filter_corpus(
    pattern: KeywordPattern, records: list[MethodRecord]
) -> tuple[list[MethodRecord], list[MethodRecord], float]:
    """Partition records into (passed, excluded) preserving order.

    Reduction is the excluded fraction; an empty corpus reduces by 0.0.
    """
    passed, excluded = [], []
    for record in records:
        (passed if evaluate(pattern, record).passed else excluded).append(record)
    reduction = len(excluded) / len(records) if records else 0.0
    return passed, excluded, reduction
