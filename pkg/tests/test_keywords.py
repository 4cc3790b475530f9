import random

import pytest

from algodetect.corpus import MethodRecord
from algodetect.keywords import (
    KeywordPattern,
    PatternError,
    compile_pattern,
    compile_regex,
    evaluate,
    filter_corpus,
)
from algodetect.resources import bundled_keyword_patterns

from oracle import keyword_hits_by_hand


def record(source, method_id="m"):
    return MethodRecord(method_id, "T.java", "m", source)


BUBBLE_RF = {
    "algorithm": "bubble_sort",
    "family": "recall_focused",
    "combinator": "any_of",
    "groups": [
        {"regexes": ["bubble", "sort"], "threshold": 1},
        {"regexes": ["arr", "temp", "i", "j", "size", "input", "list", "length"], "threshold": 3},
    ],
}

BINARY_RFEP = {
    "algorithm": "binary_search",
    "family": "recall_focused_enhanced",
    "combinator": "any_of",
    "groups": [
        {"regexes": ["binary", "search"], "threshold": 1},
        {
            "regexes": ["mid", "sorted", "low.*high", "min.*max", "first.*last", "start.*end"],
            "threshold": 2,
        },
    ],
}


def test_plain_word_is_boundary_anchored():
    assert not compile_regex("i").search("insert")
    assert compile_regex("i").search("int i = 0;")
    assert compile_regex("bubble").search("void bubbleSort(int[] a)")
    assert compile_regex("sort").search("void bubbleSort(int[] a)")


def test_metacharacter_regex_compiles_verbatim():
    rx = compile_regex("low.*high")
    assert rx.search("int low=0; int high=n;")
    assert rx.search("int low = 0;\nint high = n;")  # spans lines
    assert not rx.search("int high=0; int lot=1;")


def test_threshold_out_of_range_rejected():
    bad = {
        "algorithm": "x",
        "groups": [{"regexes": ["a", "b", "c"], "threshold": 4}],
    }
    with pytest.raises(PatternError, match="threshold"):
        compile_pattern(bad)


def test_invalid_regex_named_in_error():
    bad = {"algorithm": "x", "groups": [{"regexes": ["(unclosed"], "threshold": 1}]}
    with pytest.raises(PatternError, match="unclosed"):
        compile_pattern(bad)


def test_bubble_explicit_hit_passes():
    pattern = compile_pattern(BUBBLE_RF)
    decision = evaluate(pattern, record("void bubbleSort(int[] a) { }"))
    assert decision.passed
    assert decision.group_hits[0] >= 1


def test_bubble_generic_threshold_passes():
    pattern = compile_pattern(BUBBLE_RF)
    decision = evaluate(pattern, record("void move(){ int temp = 0; int i = 0; int j = 0; }"))
    assert decision.passed
    assert decision.group_hits == [0, 3]


def test_binary_enhanced_rejects_unrelated_method():
    pattern = compile_pattern(BINARY_RFEP)
    decision = evaluate(pattern, record("int add(int a,int b){return a+b;}"))
    assert not decision.passed
    assert decision.group_hits == [0, 0]


def test_distinct_counting_not_occurrences():
    pattern = compile_pattern(BUBBLE_RF)
    decision = evaluate(pattern, record("void f(){ int temp=0; temp++; temp--; }"))
    assert decision.group_hits[1] == 1
    assert not decision.passed


def test_filter_corpus_reduction_arithmetic():
    pattern = compile_pattern(BUBBLE_RF)
    records = [record("void bubbleSort(){}", f"p{i}") for i in range(3)]
    records += [record("void nothing(){}", f"n{i}") for i in range(7)]
    passed, excluded, reduction = filter_corpus(pattern, records)
    assert len(passed) == 3 and len(excluded) == 7
    assert reduction == 0.70


def test_empty_corpus_reduction_zero():
    pattern = compile_pattern(BUBBLE_RF)
    assert filter_corpus(pattern, [])[2] == 0.0


def test_partition_preserves_order(mini_corpus):
    pattern = bundled_keyword_patterns("recall_focused")["bubble_sort"]
    passed, excluded, _ = filter_corpus(pattern, mini_corpus)
    assert len(passed) + len(excluded) == len(mini_corpus)
    assert {r.method_id for r in passed}.isdisjoint({r.method_id for r in excluded})
    merged = sorted(passed + excluded, key=mini_corpus.index)
    assert merged == mini_corpus


def test_mini_corpus_hit_counts_match_hand_oracle(mini_corpus):
    for family in ("recall_focused", "recall_focused_enhanced"):
        for pattern in bundled_keyword_patterns(family).values():
            for rec in mini_corpus[::3]:
                decision = evaluate(pattern, rec)
                expected = [
                    keyword_hits_by_hand(group.regexes, rec.source)
                    for group in pattern.groups
                ]
                assert decision.group_hits == expected


def test_keyword_matching_ignores_letter_case():
    # Keywords hit regardless of the case they are written in. Note the
    # one deliberate asymmetry: camelCase humps count as word boundaries,
    # so uppercasing an entire camelCase identifier (which erases the hump)
    # is not equivalence-preserving; snake_case and spaced text are.
    pattern = compile_pattern(BUBBLE_RF)
    variants = [
        "void bubble_sort(int[] a) { }",
        "void BUBBLE_SORT(int[] A) { }",
        "void Bubble_Sort(int[] a) { }",
        "/* SORT the data */ void run(int[] a) { }",
    ]
    for source in variants:
        assert evaluate(pattern, record(source)).passed
    for source in ("int temp; int I; int J;", "int TEMP; int i; int j;"):
        decision = evaluate(pattern, record(f"void f() {{ {source} }}"))
        assert decision.group_hits[1] == 3


def test_adding_regex_is_monotone():
    rng = random.Random(7)
    words = ["alpha", "beta", "gamma", "delta", "low", "high", "temp", "mid"]
    for _ in range(200):
        chosen = rng.sample(words, rng.randint(1, 5))
        threshold = rng.randint(1, len(chosen))
        base = compile_pattern(
            {"algorithm": "x", "groups": [{"regexes": chosen, "threshold": threshold}]}
        )
        grown = compile_pattern(
            {
                "algorithm": "x",
                "groups": [{"regexes": chosen + [rng.choice(words)], "threshold": threshold}],
            }
        )
        text = " ".join(rng.sample(words, rng.randint(0, len(words))))
        rec = record(f"void f() {{ int {text.replace(' ', ', int ')}; }}" if text else "void f(){}")
        if evaluate(base, rec).passed:
            assert evaluate(grown, rec).passed


def test_determinism(mini_corpus):
    pattern = bundled_keyword_patterns("recall_focused")["palindrome"]
    rec = mini_corpus[0]
    assert evaluate(pattern, rec) == evaluate(pattern, rec)


def test_shipped_patterns_cover_all_algorithms():
    for family in ("recall_focused", "recall_focused_enhanced"):
        patterns = bundled_keyword_patterns(family)
        assert sorted(patterns) == [
            "binary_search",
            "bubble_sort",
            "fibonacci",
            "gcd",
            "palindrome",
            "prime_factors",
            "transpose_matrix",
        ]
        for pattern in patterns.values():
            assert isinstance(pattern, KeywordPattern)
            for group in pattern.groups:
                assert 1 <= group.threshold <= len(group.regexes)
