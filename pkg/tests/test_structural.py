import pytest

from algodetect.corpus import MethodRecord
from algodetect.resources import bundled_structural_patterns
from algodetect.structural import (
    DslError,
    StructuralPattern,
    decide,
    embed,
    filter_corpus,
    parse_dsl,
)

from oracle import oracle_embed


def record(source, name="f"):
    return MethodRecord("m", "T.java", name, source)


BUBBLE_SNIPPET = """
void f(int[] a, int n) {
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n - 1; j++) {
            if (a[j] > a[j + 1]) {
                int t = a[j];
                a[j] = a[j + 1];
                a[j + 1] = t;
            }
        }
    }
}
"""


def test_parse_four_level_nesting():
    pattern = parse_dsl("(loop (loop (if (assign source=(array-access)))))")
    kinds = [n.kind for n in pattern.root.walk()]
    assert kinds == ["loop", "loop", "if", "assign", "array-access"]
    leaf = list(pattern.root.walk())[-1]
    assert leaf.role == "source"


def test_parse_index_captures():
    pattern = parse_dsl(
        "(assign target=(array-access idx=[@i,@j]) source=(array-access idx=[@j,@i]))"
    )
    accesses = [n for n in pattern.root.walk() if n.kind == "array-access"]
    assert [a.index_captures for a in accesses] == [["i", "j"], ["j", "i"]]
    assert [a.role for a in accesses] == ["target", "source"]


def test_parse_disjunction():
    pattern = parse_dsl("(or (loop) (call recursive=true))")
    assert pattern.root.kind == "or"
    assert [c.kind for c in pattern.root.children] == ["loop", "call"]


def test_syntax_error_carries_position():
    with pytest.raises(DslError, match=r"line 2"):
        parse_dsl("(loop\n  (wrongkind))")


def test_combinator_needs_two_children():
    with pytest.raises(DslError, match="at least two"):
        parse_dsl("(or (loop))")


def test_unbound_equality_rejected():
    with pytest.raises(DslError, match="not bound"):
        parse_dsl("#equal: a b\n(loop)")


def test_bound_equality_accepted():
    pattern = parse_dsl("#equal: i j\n(array-access idx=[@i,@j])")
    assert pattern.equalities == [("i", "j")]


def test_bubble_pattern_matches_snippet():
    pattern = parse_dsl("(loop (loop (if (assign source=(array-access)))))")
    assert embed(pattern, record(BUBBLE_SNIPPET).ast).matched


def test_bubble_pattern_rejects_single_loop():
    pattern = parse_dsl("(loop (loop (if (assign source=(array-access)))))")
    rec = record("int f(int[] a){int s=0; for(int i=0;i<a.length;i++){ s += a[i]; } return s;}")
    assert not embed(pattern, rec.ast).matched


def test_transpose_capture_equality():
    pattern = parse_dsl(
        "(assign target=(array-access idx=[@i,@j]) source=(array-access idx=[@j,@i]))"
    )
    positive = record("void f(){ b[j][i] = a[i][j]; }")
    negative = record("void f(){ b[i][j] = a[i][j]; }")
    result = embed(pattern, positive.ast)
    assert result.matched
    assert set(result.witness["env"]) == {"i", "j"}
    assert sorted(result.witness["env"].values()) == ["i", "j"]
    assert not embed(pattern, negative.ast).matched
    assert oracle_embed(pattern, positive.ast)
    assert not oracle_embed(pattern, negative.ast)


def test_witness_mapping_is_replayable():
    pattern = parse_dsl("(loop (loop (if (assign source=(array-access)))))")
    result = embed(pattern, record(BUBBLE_SNIPPET).ast)
    assert result.matched
    nodes = result.witness["nodes"]
    pattern_nodes = list(pattern.root.walk())
    assert set(nodes) == set(range(len(pattern_nodes)))
    # kinds line up and images are pairwise distinct
    for idx, pnode in enumerate(pattern_nodes):
        assert nodes[idx].kind == pnode.kind
    ids = [id(n) for n in nodes.values()]
    assert len(set(ids)) == len(ids)
    # nesting respected for the loop->loop->if chain (descendant edges)
    spans = [nodes[i].span for i in range(4)]
    for outer, inner in zip(spans, spans[1:]):
        assert outer[0] <= inner[0] and inner[1] <= outer[1]


def test_fail_open_on_parse_failure():
    broken = MethodRecord("broken", "T.java", "f", ")))((")
    pattern = parse_dsl("(loop)")
    decision = decide(pattern, broken)
    assert decision.passed
    assert decision.pass_reason == "parse_failure"


def test_filter_corpus_counts(mini_corpus, mini_truth):
    pattern = bundled_structural_patterns("prominent_feature")["bubble_sort"]
    labels = mini_truth.labels_for("bubble_sort")
    records = [r for r in mini_corpus if r.method_id in labels]
    passed, excluded, reduction = filter_corpus(pattern, records)
    assert len(passed) + len(excluded) == len(records)
    assert reduction == len(excluded) / len(records)
    # hand-checked composition of the bundled fixtures
    passed_names = {r.name for r in passed}
    assert "bubbleSortBasic" in passed_names
    assert "gnomeShuffleSort" in passed_names  # lookalike the filter cannot cut
    assert "insertionSort" not in passed_names
    assert "bubbleSortList" not in passed_names  # list variant has no array access


def test_all_negative_corpus_reduction_is_one():
    pattern = parse_dsl("(loop (loop (if (assign source=(array-access)))))")
    records = [record("int add(int a,int b){ return a+b; }"), record("void g(){ x = 1; }")]
    _, _, reduction = filter_corpus(pattern, records)
    assert reduction == 1.0


def test_pattern_weakening_is_monotone():
    full = parse_dsl("(loop (loop (if (assign source=(array-access)))))")
    weaker = parse_dsl("(loop (loop (if)))")
    weakest = parse_dsl("(loop (loop))")
    for source in (BUBBLE_SNIPPET,):
        ast = record(source).ast
        if embed(full, ast).matched:
            assert embed(weaker, ast).matched
            assert embed(weakest, ast).matched


def test_subtree_monotonicity():
    pattern = parse_dsl("(loop (assign))")
    inner = record("void f(){ while(x) { y = 1; } }").ast
    wrapped = record("void g(){ if (ready) { while(x) { y = 1; } } log(); }").ast
    assert embed(pattern, inner).matched
    assert embed(pattern, wrapped).matched


def test_injectivity_requires_distinct_nodes():
    pattern = parse_dsl("(loop (assign) (assign))")
    one_assign = record("void f(){ while(x) { y = 1; } }")
    two_assigns = record("void f(){ while(x) { y = 1; z = 2; } }")
    assert not embed(pattern, one_assign.ast).matched
    assert embed(pattern, two_assigns.ast).matched
    assert not oracle_embed(pattern, one_assign.ast)
    assert embed(pattern, two_assigns.ast).matched == oracle_embed(pattern, two_assigns.ast)


def test_and_shares_injectivity_scope():
    pattern = parse_dsl("(and (loop) (loop))")
    one_loop = record("void f(){ while(x) { y = 1; } }")
    two_loops = record("void f(){ while(x) { y = 1; } for(;;) { z = 2; } }")
    assert not embed(pattern, one_loop.ast).matched
    assert embed(pattern, two_loops.ast).matched
    assert oracle_embed(pattern, one_loop.ast) == embed(pattern, one_loop.ast).matched
    assert oracle_embed(pattern, two_loops.ast) == embed(pattern, two_loops.ast).matched


def test_role_scope_restricts_matching():
    target_only = parse_dsl("(assign target=(array-access))")
    source_only = parse_dsl("(assign source=(array-access))")
    write = record("void f(){ a[i] = x; }").ast
    read = record("void f(){ x = a[i]; }").ast
    assert embed(target_only, write).matched
    assert not embed(target_only, read).matched
    assert not embed(source_only, write).matched
    assert embed(source_only, read).matched


def test_condition_role():
    pattern = parse_dsl("(if condition=(binary-op (array-access)))")
    guarded = record("void f(){ if (a[mid] < key) { low = mid; } }").ast
    unguarded = record("void f(){ if (ready) { a[mid] = key; } }").ast
    assert embed(pattern, guarded).matched
    assert not embed(pattern, unguarded).matched


def test_regex_attribute_matcher():
    pattern = parse_dsl("(call name=/^(sort|order)/)")
    assert embed(pattern, record("void f(){ sortAll(x); }").ast).matched
    assert not embed(pattern, record("void f(){ resort(x); }").ast).matched


def test_shipped_patterns_parse_and_cover_algorithms():
    prominent = bundled_structural_patterns("prominent_feature")
    assert sorted(prominent) == [
        "binary_search",
        "bubble_sort",
        "fibonacci",
        "gcd",
        "palindrome",
        "prime_factors",
        "transpose_matrix",
    ]
    for pattern in prominent.values():
        assert isinstance(pattern, StructuralPattern)
    assert set(bundled_structural_patterns("standalone")) == {"binary_search"}
    assert set(bundled_structural_patterns("standalone_loose")) == {"binary_search"}


def test_standalone_variants_differ_in_restrictiveness(mini_corpus, mini_truth):
    restrictive = bundled_structural_patterns("standalone")["binary_search"]
    loose = bundled_structural_patterns("standalone_loose")["binary_search"]
    labels = mini_truth.labels_for("binary_search")
    positives = [
        r for r in mini_corpus if labels.get(r.method_id) == "positive"
    ]
    hits_restrictive = sum(embed(restrictive, r.ast).matched for r in positives)
    hits_loose = sum(embed(loose, r.ast).matched for r in positives)
    assert hits_restrictive < hits_loose
    recursive = next(r for r in positives if r.name == "binarySearchRecursiveClassic")
    assert not embed(restrictive, recursive.ast).matched
    assert embed(loose, recursive.ast).matched
