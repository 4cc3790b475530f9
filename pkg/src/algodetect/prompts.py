"""Prompt construction for the four classification strategies.

Templates are byte-stable: golden tests pin them. The score rubric doubles
as the in-context-learning template; ICL prompts instantiate it once per
example with the expected score as the assistant turn, then once for the
query method.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import MethodRecord

YES_NO_TEMPLATE = (
    "SNIPPET: {method} Does the snippet implement {algorithm}, "
    "only answer with 'Yes' or 'No'?"
)

SCORE_RUBRIC = (
    "SNIPPET: {method} Does the code snippet implement the algorithm {algorithm}?\n"
    "Score the snippet from '0' to '4', where:\n"
    "0: The code does not implement the algorithm.\n"
    "1: The code shares similarities with the algorithm but most likely does not "
    "implement the algorithm.\n"
    "2: The code appears to implement the algorithm, but may not fully match the "
    "algorithm's specification.\n"
    "3: The code most likely implements the algorithm with minor variations.\n"
    "4: The code implements the algorithm.\n"
)

SCORE_TEMPLATE = SCORE_RUBRIC + "Strictly respond with a number from the choices above."

COT_TEMPLATE = SCORE_RUBRIC + "Lets think step-by-step, then answer with a number from the choices above."

SCORE_SCALE = (0, 4)  # a finer 0-10 scale is unsupported: not all models have a '10' token

# Declared example scores: reference implementations score 4, similar
# negatives sit at rubric level 1, random negatives at 0.
POSITIVE_SCORE = 4
SIMILAR_NEGATIVE_SCORE = 1
RANDOM_NEGATIVE_SCORE = 0

ICL_COMBINATIONS = {
    "0p2n": (0, 2),
    "2p0n": (2, 0),
    "2p2n": (2, 2),
    "4p4n": (4, 4),
}

ALGORITHM_DISPLAY = {
    "prime_factors": "Prime Factors",
    "gcd": "Greatest Common Divisor",
    "fibonacci": "Fibonacci",
    "palindrome": "Palindrome",
    "bubble_sort": "Bubble Sort",
    "binary_search": "Binary Search",
    "transpose_matrix": "Transpose Matrix",
}


class PromptConfigError(ValueError):
    """Raised for unusable prompt configurations (e.g. missing examples)."""


_ALGORITHM_ALIASES = {
    "greatest_common_divisor": "gcd",
    "greatest_common_divisor_gcd": "gcd",
}


def canonical_algorithm(name: str) -> str:
    """Map any spelling of a functionality name to its canonical key."""
    key = "".join(ch if ch.isalnum() else "_" for ch in name.strip().lower())
    while "__" in key:
        key = key.replace("__", "_")
    key = key.strip("_")
    return _ALGORITHM_ALIASES.get(key, key)


def display_algorithm(key: str) -> str:
    return ALGORITHM_DISPLAY.get(key, key.replace("_", " ").title())


@dataclass(frozen=True)
class DecodingParams:
    temperature: float = 0.0
    top_k: int = 0
    top_p: float = 1.0
    max_tokens: int = 1

    @classmethod
    def for_cot(cls) -> "DecodingParams":
        return cls(temperature=0.5, top_k=50, top_p=0.9, max_tokens=300)


@dataclass
class PromptStyle:
    variant: str  # yes_no | score | icl | cot
    icl_examples: list[tuple[str, int]] = field(default_factory=list)
    decoding: DecodingParams = field(default_factory=DecodingParams)
    label: str = ""

    def __post_init__(self):
        if self.variant not in ("yes_no", "score", "icl", "cot"):
            raise PromptConfigError(f"unknown prompt variant {self.variant!r}")
        if not self.label:
            self.label = self.variant

    @property
    def single_token(self) -> bool:
        return self.variant in ("yes_no", "score", "icl")

    def fingerprint(self) -> str:
        payload = {
            "variant": self.variant,
            "examples": self.icl_examples,
            "decoding": [
                self.decoding.temperature,
                self.decoding.top_k,
                self.decoding.top_p,
                self.decoding.max_tokens,
            ]
            if not self.single_token
            else None,  # sampling params are inert for logprob decoding
            "templates": [YES_NO_TEMPLATE, SCORE_TEMPLATE, COT_TEMPLATE],
        }
        blob = json.dumps(payload, sort_keys=True, ensure_ascii=False)
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


@dataclass
class ExampleLibrary:
    """Per-algorithm reference snippets for in-context learning."""

    positives: dict[str, list[str]]
    similar_negatives: dict[str, list[str]]
    random_negatives: dict[str, list[str]]

    @classmethod
    def load(cls, path: str | Path) -> "ExampleLibrary":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        positives, similar, rand = {}, {}, {}
        for algorithm, entry in data.items():
            key = canonical_algorithm(algorithm)
            positives[key] = list(entry.get("positives", []))
            similar[key] = list(entry.get("similar_negatives", []))
            rand[key] = list(entry.get("random_negatives", []))
        return cls(positives, similar, rand)

    def select(
        self, algorithm: str, n_pos: int, n_neg: int, negative_kind: str = "similar"
    ) -> list[tuple[str, int]]:
        """Build the ICL example sequence: positives first, then negatives,
        each in library order."""
        key = canonical_algorithm(algorithm)
        pool_pos = self.positives.get(key, [])
        if negative_kind == "similar":
            pool_neg = self.similar_negatives.get(key, [])
            neg_score = SIMILAR_NEGATIVE_SCORE
        elif negative_kind == "random":
            pool_neg = self.random_negatives.get(key, [])
            neg_score = RANDOM_NEGATIVE_SCORE
        else:
            raise PromptConfigError(f"unknown negative kind {negative_kind!r}")
        if len(pool_pos) < n_pos:
            raise PromptConfigError(
                f"{key}: need {n_pos} positive examples, library has {len(pool_pos)}"
            )
        if len(pool_neg) < n_neg:
            raise PromptConfigError(
                f"{key}: need {n_neg} {negative_kind} negatives, library has {len(pool_neg)}"
            )
        examples = [(src, POSITIVE_SCORE) for src in pool_pos[:n_pos]]
        examples += [(src, neg_score) for src in pool_neg[:n_neg]]
        return examples


def make_style(
    spec: str,
    library: ExampleLibrary | None = None,
    algorithm: str | None = None,
    negative_kind: str = "similar",
) -> PromptStyle:
    """Build a PromptStyle from a CLI-style spec: ``score``, ``yesno``,
    ``cot`` or ``icl:2p2n``."""
    spec = spec.lower()
    if spec in ("yesno", "yes_no"):
        return PromptStyle("yes_no", label="yesno")
    if spec == "score":
        return PromptStyle("score")
    if spec == "cot":
        return PromptStyle("cot", decoding=DecodingParams.for_cot())
    if spec.startswith("icl:"):
        combo = spec.split(":", 1)[1]
        if combo not in ICL_COMBINATIONS:
            raise PromptConfigError(
                f"unknown ICL combination {combo!r}; expected one of {sorted(ICL_COMBINATIONS)}"
            )
        n_pos, n_neg = ICL_COMBINATIONS[combo]
        if library is None or algorithm is None:
            raise PromptConfigError("ICL styles need an example library and an algorithm")
        examples = library.select(algorithm, n_pos, n_neg, negative_kind)
        return PromptStyle("icl", icl_examples=examples, label=f"icl:{combo}")
    raise PromptConfigError(f"unknown prompt style {spec!r}")


def _fill(template: str, method_source: str, algorithm_shown: str) -> str:
    # Plain replacement, not str.format: Java sources are full of braces.
    # Algorithm first so placeholder-like text inside code stays untouched.
    return template.replace("{algorithm}", algorithm_shown).replace("{method}", method_source)


def build_prompt(style: PromptStyle, algorithm: str, method: MethodRecord) -> list[dict]:
    """Render the message sequence for one classification request."""
    shown = display_algorithm(canonical_algorithm(algorithm))
    if style.variant == "yes_no":
        return [{"role": "user", "content": _fill(YES_NO_TEMPLATE, method.source, shown)}]
    if style.variant == "score":
        return [{"role": "user", "content": _fill(SCORE_TEMPLATE, method.source, shown)}]
    if style.variant == "cot":
        return [{"role": "user", "content": _fill(COT_TEMPLATE, method.source, shown)}]
    messages: list[dict] = []
    for source, score in style.icl_examples:
        messages.append({"role": "user", "content": _fill(SCORE_TEMPLATE, source, shown)})
        messages.append({"role": "assistant", "content": str(score)})
    messages.append({"role": "user", "content": _fill(SCORE_TEMPLATE, method.source, shown)})
    return messages
