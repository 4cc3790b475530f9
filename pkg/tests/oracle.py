"""Independent reference implementations used as test oracles.

Everything here deliberately avoids the production code paths: the embed
oracle enumerates injective mappings directly, the keyword oracle applies
regexes by hand, and the metric recounts are plain tallies over rows.
"""

from __future__ import annotations

import itertools
import re

from algodetect.parser import AstNode
from algodetect.structural import PatternNode, StructuralPattern


def _walk(node: AstNode):
    yield node
    for child in node.children:
        for sub in child.walk():
            yield sub


def _proper_descendants(node: AstNode) -> list[AstNode]:
    out = []
    for child in node.children:
        out.extend(child.walk())
    return out


def _role_scope(node: AstNode, role: str) -> list[AstNode]:
    out = []
    for child in node.children:
        if child.role == role:
            out.extend(child.walk())
    return out


def _expand(p: PatternNode, inherited_role):
    """All concrete forests a pattern resolves to after or/and expansion.

    A forest is a list of trees; a tree is (pnode, effective_role, children).
    """
    role = p.role if p.role is not None else inherited_role
    if p.kind == "or":
        forests = []
        for branch in p.children:
            forests.extend(_expand(branch, role))
        return forests
    if p.kind == "and":
        parts = [_expand(branch, role) for branch in p.children]
        return [sum(combo, []) for combo in itertools.product(*parts)]
    child_parts = [_expand(child, None) for child in p.children]
    forests = []
    for combo in itertools.product(*child_parts):
        children = sum(combo, [])
        forests.append([(p, role, children)])
    return forests


def _flatten(forest):
    """Flatten a forest into (pnode, effective_role, parent_index) tuples."""
    items = []

    def visit(tree, parent_idx):
        pnode, role, children = tree
        idx = len(items)
        items.append((pnode, role, parent_idx))
        for child in children:
            visit(child, idx)

    for tree in forest:
        visit(tree, None)
    return items


def _node_ok(pnode: PatternNode, anode: AstNode) -> bool:
    if pnode.kind != "any" and pnode.kind != anode.kind:
        return False
    for key, (mode, matcher) in pnode.attr_constraints:
        value = anode.attrs.get(key)
        if not isinstance(value, str):
            return False
        if mode == "exact" and value != matcher:
            return False
        if mode == "regex" and not re.search(matcher.pattern, value):
            return False
    if pnode.index_captures is not None:
        indices = anode.attrs.get("indices")
        if not isinstance(indices, tuple) or len(indices) != len(pnode.index_captures):
            return False
    return True


def oracle_embed(pattern: StructuralPattern, ast: AstNode) -> bool:
    """Brute-force check: does any injective, constraint-consistent mapping
    from the pattern to the AST exist?"""
    all_nodes = list(ast.walk())
    for forest in _expand(pattern.root, None):
        items = _flatten(forest)
        candidates = []
        for pnode, _, _ in items:
            candidates.append([a for a in all_nodes if _node_ok(pnode, a)])
        if any(not c for c in candidates):
            continue

        def assign(idx, chosen, env):
            if idx == len(items):
                for a, b in pattern.equalities:
                    if a not in env or b not in env or env[a] != env[b]:
                        return False
                return True
            pnode, role, parent_idx = items[idx]
            for anode in candidates[idx]:
                if any(anode is c for c in chosen):
                    continue
                if parent_idx is not None:
                    parent_ast = chosen[parent_idx]
                    scope = (
                        _role_scope(parent_ast, role)
                        if role
                        else _proper_descendants(parent_ast)
                    )
                    if not any(anode is s for s in scope):
                        continue
                elif role is not None:
                    # A role on a pattern root can only come from a
                    # role-restricted child; roots never carry one here.
                    pass
                new_env = dict(env)
                ok = True
                for name, attr in pnode.captures:
                    value = anode.attrs.get(attr)
                    if not isinstance(value, str) or new_env.get(name, value) != value:
                        ok = False
                        break
                    new_env[name] = value
                if ok and pnode.index_captures is not None:
                    for name, text in zip(pnode.index_captures, anode.attrs["indices"]):
                        if new_env.get(name, text) != text:
                            ok = False
                            break
                        new_env[name] = text
                if not ok:
                    continue
                if assign(idx + 1, chosen + [anode], new_env):
                    return True
            return False

        if assign(0, [], {}):
            return True
    return False


def keyword_hits_by_hand(regex_specs: list[str], text: str) -> int:
    """Distinct-regex hit count applying the documented anchoring directly."""
    count = 0
    for raw in regex_specs:
        if re.fullmatch(r"[A-Za-z0-9]+", raw):
            word = "".join(f"[{c.lower()}{c.upper()}]" if c.isalpha() else c for c in raw)
            pattern = (
                r"(?:(?<![A-Za-z0-9])|(?<=[a-z])(?=[A-Z]))"
                + word
                + r"(?:(?![A-Za-z0-9])|(?<=[a-z])(?=[A-Z]))"
            )
            hit = re.search(pattern, text, re.DOTALL)
        else:
            hit = re.search(raw, text, re.IGNORECASE | re.DOTALL)
        if hit:
            count += 1
    return count


def confusion_by_hand(rows, threshold, lower_bound=False):
    """(tp, fp, fn, tn) tallied directly from raw result rows."""
    tp = fp = fn = tn = 0
    for row in rows:
        predicted = (not row.excluded) and row.raw_score is not None and row.raw_score >= threshold
        if row.label is None:
            if lower_bound and predicted:
                fp += 1
            continue
        if row.label == "positive":
            if predicted:
                tp += 1
            else:
                fn += 1
        else:
            if predicted:
                fp += 1
            else:
                tn += 1
    return tp, fp, fn, tn
