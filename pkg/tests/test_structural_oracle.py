"""Embedding vs. brute-force enumeration on randomized ASTs."""

import random

from algodetect.resources import bundled_structural_patterns
from algodetect.structural import embed, parse_dsl

from oracle import oracle_embed
from treegen import random_ast


def all_shipped_patterns():
    patterns = list(bundled_structural_patterns("prominent_feature").values())
    patterns.append(bundled_structural_patterns("standalone")["binary_search"])
    patterns.append(bundled_structural_patterns("standalone_loose")["binary_search"])
    return patterns


def test_embed_agrees_with_oracle_on_random_trees():
    rng = random.Random(20240817)
    patterns = all_shipped_patterns()
    matched = 0
    for trial in range(120):
        ast = random_ast(rng, max_nodes=40)
        for pattern in patterns:
            got = embed(pattern, ast).matched
            want = oracle_embed(pattern, ast)
            assert got == want, f"trial {trial}: {pattern.name} disagrees"
            matched += got
    assert matched > 0  # the sample must exercise the positive path too


def _plant_swap_assign(ast, rng):
    """Attach an a[x][y] = b[?,?] assignment; reversed half the time."""
    from algodetect.parser import AstNode

    x, y = rng.choice([("i", "j"), ("r", "c"), ("k", "k")])
    src = (y, x) if rng.random() < 0.5 else (x, y)
    target = AstNode("array-access", {"indices": (x, y)},
                     [AstNode("identifier-ref", {"name": "a"})], role="target")
    source = AstNode("array-access", {"indices": src},
                     [AstNode("identifier-ref", {"name": "b"})], role="source")
    block = ast.children[-1]
    block.children.append(AstNode("assign", {}, [target, source]))


def test_embed_agrees_on_capture_heavy_pattern():
    pattern = parse_dsl(
        "(assign target=(array-access idx=[@i,@j]) source=(array-access idx=[@j,@i]))"
    )
    rng = random.Random(99)
    positives = negatives = 0
    for _ in range(200):
        ast = random_ast(rng, max_nodes=30)
        if rng.random() < 0.5:
            _plant_swap_assign(ast, rng)
        got = embed(pattern, ast).matched
        want = oracle_embed(pattern, ast)
        assert got == want
        positives += got
        negatives += not got
    assert positives > 0 and negatives > 0


def test_embed_agrees_on_combinator_patterns():
    sources = [
        "(or (loop (assign)) (call recursive=true))",
        "(and (loop) (binary-op op=\"%\"))",
        "(and (or (loop) (call)) (or (assign) (var-decl)))",
        "(loop (if (assign target=(array-access))))",
        "(if condition=(binary-op (array-access)) body=(assign))",
    ]
    patterns = [parse_dsl(s) for s in sources]
    rng = random.Random(4242)
    positives = 0
    for _ in range(120):
        ast = random_ast(rng, max_nodes=35)
        for pattern in patterns:
            got = embed(pattern, ast).matched
            assert got == oracle_embed(pattern, ast)
            positives += got
    assert positives > 0
