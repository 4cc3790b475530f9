"""Locate bundled data: filter patterns, ICL examples, the mini corpus."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

DATA_DIR = Path(__file__).parent / "data"

KEYWORD_FAMILIES = ("recall_focused", "recall_focused_enhanced")
STRUCTURAL_FAMILIES = ("prominent_feature", "standalone", "standalone_loose")


def keyword_pattern_dir(family: str = "recall_focused") -> Path:
    if family not in KEYWORD_FAMILIES:
        raise ValueError(f"unknown keyword pattern family {family!r}")
    return DATA_DIR / "patterns" / "keywords" / family


def structural_pattern_dir(family: str = "prominent_feature") -> Path:
    if family not in STRUCTURAL_FAMILIES:
        raise ValueError(f"unknown structural pattern family {family!r}")
    return DATA_DIR / "patterns" / "structural" / family


@lru_cache(maxsize=None)
def bundled_keyword_patterns(family: str = "recall_focused"):
    from .keywords import load_pattern_dir

    return load_pattern_dir(keyword_pattern_dir(family))


@lru_cache(maxsize=None)
def bundled_structural_patterns(family: str = "prominent_feature"):
    from .structural import load_pattern_dir

    return load_pattern_dir(structural_pattern_dir(family))


def icl_examples_path() -> Path:
    return DATA_DIR / "icl_examples.json"


@lru_cache(maxsize=None)
def bundled_example_library():
    from .prompts import ExampleLibrary

    return ExampleLibrary.load(icl_examples_path())


def minicorpus_dir() -> Path:
    return DATA_DIR / "minicorpus"


def minicorpus_jsonl() -> Path:
    return minicorpus_dir() / "methods.jsonl"


def minicorpus_truth() -> Path:
    return minicorpus_dir() / "truth.jsonl"
