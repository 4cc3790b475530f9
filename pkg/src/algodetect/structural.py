"""Structural AST patterns: a small S-expression DSL plus tree embedding.

A pattern describes the minimal shape a method must contain, e.g. two nested
loops with a guarded array assignment. Matching looks for an injective
mapping from pattern nodes to AST nodes where kinds and attribute
constraints hold, role-restricted children (target/source/condition/body)
land inside the corresponding subtree of their parent's image, free children
land on proper descendants, and shared capture names bind to identical
canonical texts.

Grammar::

    pattern    := node | "(or" pattern pattern+ ")" | "(and" pattern pattern+ ")"
    node       := "(" kind attr* child* ")"
    kind       := loop | if | assign | array-access | call | binary-op
                  | unary-op | var-decl | return | literal | any
    attr       := key "=" value
    value      := bareword | "quoted" | /regex/ | @capture | "[" @cap ("," @cap)* "]"
    child      := role "=" pattern | pattern          # role: target|source|condition|body

    idx=[@i,@j] requires exactly two indices on an array access and binds
    them in order; key=@x binds a scalar attribute to capture x.

Pattern files are one pattern each, with ``#algorithm:``, ``#family:`` and
optional ``#reconstructed:`` / ``#equal: a b`` header comment lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .corpus import MethodRecord
from .parser import AST_KINDS, AstNode

PATTERN_KINDS = frozenset(
    [
        "loop", "if", "assign", "array-access", "call", "binary-op",
        "unary-op", "var-decl", "return", "literal", "any",
    ]
)
ROLES = ("target", "source", "condition", "body")


class DslError(ValueError):
    """Syntax or validation error in a structural pattern."""


@dataclass
class PatternNode:
    kind: str  # a PATTERN_KINDS member, or "or"/"and"
    attr_constraints: list[tuple[str, tuple]] = field(default_factory=list)
    captures: list[tuple[str, str]] = field(default_factory=list)  # (capture, attribute)
    index_captures: Optional[list[str]] = None
    role: Optional[str] = None
    children: list["PatternNode"] = field(default_factory=list)

    @property
    def is_combinator(self) -> bool:
        return self.kind in ("or", "and")

    def walk(self) -> Iterator["PatternNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class StructuralPattern:
    algorithm: str
    family: str  # prominent_feature | standalone
    root: PatternNode
    equalities: list[tuple[str, str]] = field(default_factory=list)
    reconstructed: bool = False
    name: str = ""


@dataclass
class MatchResult:
    matched: bool
    witness: Optional[dict] = None  # {"spans": {...}, "env": {...}}


@dataclass
class StructuralDecision:
    method_id: str
    passed: bool
    pass_reason: str  # "match" | "parse_failure" | ""


# ---------------------------------------------------------------------------
# DSL parsing


_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<comment>\#[^\n]*)
    | (?P<punct>[()\[\],=])
    | (?P<regex>/(?:\\.|[^/\\])*/)
    | (?P<string>"(?:\\.|[^"\\])*")
    | (?P<capture>@[A-Za-z_][A-Za-z0-9_]*)
    | (?P<word>[A-Za-z0-9_][A-Za-z0-9_.*+-]*|[<>!&|^%/*+-]+)
    """,
    re.VERBOSE,
)


class _DslTokens:
    def __init__(self, text: str):
        self.items: list[tuple[str, str, int, int]] = []  # (type, value, line, col)
        line, col = 1, 1
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                raise DslError(f"line {line}, col {col}: unexpected character {text[pos]!r}")
            kind = m.lastgroup
            value = m.group()
            if kind not in ("ws", "comment"):
                self.items.append((kind, value, line, col))
            newlines = value.count("\n")
            if newlines:
                line += newlines
                col = len(value) - value.rfind("\n")
            else:
                col += len(value)
            pos = m.end()
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def take(self):
        item = self.peek()
        if item is None:
            raise DslError("unexpected end of pattern")
        self.pos += 1
        return item

    def expect(self, value: str):
        item = self.take()
        if item[1] != value:
            raise DslError(f"line {item[2]}, col {item[3]}: expected {value!r}, found {item[1]!r}")
        return item


def _parse_headers(text: str) -> dict:
    headers: dict[str, str] = {}
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if ":" in body:
                key, _, value = body.partition(":")
                key = key.strip().lower()
                if key == "equal":
                    headers.setdefault("equal", []).append(value.strip())
                else:
                    headers[key] = value.strip()
    return headers


def _unquote(raw: str) -> str:
    return re.sub(r"\\(.)", r"\1", raw[1:-1])


def _parse_node(toks: _DslTokens) -> PatternNode:
    open_item = toks.expect("(")
    head = toks.take()
    if head[0] != "word":
        raise DslError(f"line {head[2]}, col {head[3]}: expected node kind, found {head[1]!r}")
    kind = head[1]
    if kind in ("or", "and"):
        children = []
        while toks.peek() is not None and toks.peek()[1] != ")":
            children.append(_parse_node(toks))
        toks.expect(")")
        if len(children) < 2:
            raise DslError(
                f"line {open_item[2]}, col {open_item[3]}: {kind} needs at least two children"
            )
        return PatternNode(kind=kind, children=children)
    if kind not in PATTERN_KINDS:
        raise DslError(f"line {head[2]}, col {head[3]}: unknown node kind {kind!r}")

    node = PatternNode(kind=kind)
    while True:
        item = toks.peek()
        if item is None:
            raise DslError("unexpected end of pattern: missing ')'")
        if item[1] == ")":
            toks.take()
            return node
        if item[1] == "(":
            node.children.append(_parse_node(toks))
            continue
        if item[0] == "word":
            key_item = toks.take()
            toks.expect("=")
            key = key_item[1]
            nxt = toks.peek()
            if nxt is None:
                raise DslError("unexpected end of pattern after '='")
            if nxt[1] == "(":
                if key not in ROLES:
                    raise DslError(
                        f"line {key_item[2]}, col {key_item[3]}: unknown child role {key!r}"
                    )
                child = _parse_node(toks)
                child.role = key
                node.children.append(child)
                continue
            if nxt[1] == "[":
                toks.take()
                names = []
                while True:
                    cap = toks.take()
                    if cap[0] != "capture":
                        raise DslError(
                            f"line {cap[2]}, col {cap[3]}: expected @capture inside '[...]'"
                        )
                    names.append(cap[1][1:])
                    sep = toks.take()
                    if sep[1] == "]":
                        break
                    if sep[1] != ",":
                        raise DslError(f"line {sep[2]}, col {sep[3]}: expected ',' or ']'")
                if key != "idx":
                    raise DslError(
                        f"line {key_item[2]}, col {key_item[3]}: ordered captures only apply to idx"
                    )
                node.index_captures = names
                continue
            value = toks.take()
            if value[0] == "capture":
                node.captures.append((value[1][1:], key))
            elif value[0] == "regex":
                raw = value[1][1:-1].replace("\\/", "/")
                try:
                    node.attr_constraints.append((key, ("regex", re.compile(raw))))
                except re.error as exc:
                    raise DslError(f"line {value[2]}, col {value[3]}: bad regex: {exc}") from exc
            elif value[0] == "string":
                node.attr_constraints.append((key, ("exact", _unquote(value[1]))))
            elif value[0] == "word":
                node.attr_constraints.append((key, ("exact", value[1])))
            else:
                raise DslError(f"line {value[2]}, col {value[3]}: bad attribute value {value[1]!r}")
            continue
        raise DslError(f"line {item[2]}, col {item[3]}: unexpected {item[1]!r}")


def _bound_captures(root: PatternNode) -> set[str]:
    names = set()
    for node in root.walk():
        names.update(name for name, _ in node.captures)
        if node.index_captures:
            names.update(node.index_captures)
    return names


def parse_dsl(text: str, name: str = "<pattern>") -> StructuralPattern:
    """Parse one pattern file's text into a StructuralPattern."""
    headers = _parse_headers(text)
    toks = _DslTokens(text)
    root = _parse_node(toks)
    trailing = toks.peek()
    if trailing is not None:
        raise DslError(
            f"line {trailing[2]}, col {trailing[3]}: trailing input after pattern"
        )
    equalities = []
    for entry in headers.get("equal", []):
        parts = entry.replace(",", " ").split()
        if len(parts) != 2:
            raise DslError(f"{name}: #equal expects two capture names, got {entry!r}")
        equalities.append((parts[0], parts[1]))
    bound = _bound_captures(root)
    for a, b in equalities:
        for cap in (a, b):
            if cap not in bound:
                raise DslError(f"{name}: equality capture {cap!r} is not bound in the pattern")
    return StructuralPattern(
        algorithm=headers.get("algorithm", ""),
        family=headers.get("family", "prominent_feature"),
        root=root,
        equalities=equalities,
        reconstructed=headers.get("reconstructed", "").lower() == "true",
        name=name,
    )


def load_pattern_file(path: str | Path) -> StructuralPattern:
    path = Path(path)
    return parse_dsl(path.read_text(encoding="utf-8"), name=path.stem)


def load_pattern_dir(path: str | Path) -> dict[str, StructuralPattern]:
    patterns = {}
    for file in sorted(Path(path).glob("*.pat")):
        pat = load_pattern_file(file)
        patterns[pat.algorithm] = pat
    if not patterns:
        raise DslError(f"no structural pattern files under {path}")
    return patterns


# ---------------------------------------------------------------------------
# Embedding


class _TreeIndex:
    def __init__(self, root: AstNode):
        self.nodes: list[AstNode] = list(root.walk())
        self.ids = {id(n): i for i, n in enumerate(self.nodes)}
        self.subtree: dict[int, list[AstNode]] = {}
        for node in self.nodes:
            self.subtree[id(node)] = list(node.walk())

    def descendants(self, node: AstNode) -> list[AstNode]:
        return self.subtree[id(node)][1:]

    def role_scope(self, node: AstNode, role: str) -> list[AstNode]:
        scope: list[AstNode] = []
        for child in node.children:
            if child.role == role:
                scope.extend(self.subtree[id(child)])
        return scope


def _attr_ok(pnode: PatternNode, anode: AstNode) -> bool:
    if pnode.kind != "any" and pnode.kind != anode.kind:
        return False
    for key, (mode, matcher) in pnode.attr_constraints:
        value = anode.attrs.get(key)
        if not isinstance(value, str):
            return False
        if mode == "exact" and value != matcher:
            return False
        if mode == "regex" and not matcher.search(value):
            return False
    if pnode.index_captures is not None:
        indices = anode.attrs.get("indices")
        if not isinstance(indices, tuple) or len(indices) != len(pnode.index_captures):
            return False
    return True


def _bind(pnode: PatternNode, anode: AstNode, env: dict) -> Optional[dict]:
    new_env = env
    def put(name: str, text: str) -> bool:
        nonlocal new_env
        existing = new_env.get(name)
        if existing is not None:
            return existing == text
        if new_env is env:
            new_env = dict(env)
        new_env[name] = text
        return True

    for name, attr in pnode.captures:
        value = anode.attrs.get(attr)
        if not isinstance(value, str) or not put(name, value):
            return None
    if pnode.index_captures is not None:
        for name, text in zip(pnode.index_captures, anode.attrs["indices"]):
            if not put(name, text):
                return None
    return new_env


def embed(pattern: StructuralPattern, ast: AstNode) -> MatchResult:
    """Decide whether the pattern tree embeds into the AST.

    Exhaustive backtracking over candidate anchorings; all concrete pattern
    nodes map to pairwise-distinct AST nodes and capture bindings must agree
    on canonical text. Only ``matched`` is contractual; the witness reports
    one successful mapping.
    """
    index = _TreeIndex(ast)

    def match_node(pnode, scope, env, used, witness):
        if pnode.kind == "or":
            for branch in pnode.children:
                yield from match_node(branch, scope, env, used, witness)
            return
        if pnode.kind == "and":
            yield from match_all(pnode.children, scope, env, used, witness)
            return
        for anode in scope:
            aid = id(anode)
            if aid in used:
                continue
            if not _attr_ok(pnode, anode):
                continue
            env2 = _bind(pnode, anode, env)
            if env2 is None:
                continue
            witness2 = dict(witness)
            witness2[id(pnode)] = anode
            yield from match_children(
                pnode.children, anode, env2, used | {aid}, witness2
            )

    def match_all(branches, scope, env, used, witness):
        if not branches:
            yield env, used, witness
            return
        head, rest = branches[0], branches[1:]
        for env2, used2, witness2 in match_node(head, scope, env, used, witness):
            yield from match_all(rest, scope, env2, used2, witness2)

    def match_children(children, anchor, env, used, witness):
        if not children:
            yield env, used, witness
            return
        head, rest = children[0], children[1:]
        scope = (
            index.role_scope(anchor, head.role)
            if head.role
            else index.descendants(anchor)
        )
        for env2, used2, witness2 in match_node(head, scope, env, used, witness):
            yield from match_children(rest, anchor, env2, used2, witness2)

    preorder = {id(p): i for i, p in enumerate(pattern.root.walk())}
    for env, _, witness in match_node(pattern.root, index.nodes, {}, frozenset(), {}):
        if all(
            a in env and b in env and env[a] == env[b] for a, b in pattern.equalities
        ):
            nodes = {preorder[pid]: node for pid, node in witness.items()}
            spans = {pi: node.span for pi, node in nodes.items()}
            return MatchResult(True, {"nodes": nodes, "spans": spans, "env": env})
    return MatchResult(False, None)


def decide(pattern: StructuralPattern, record: MethodRecord) -> StructuralDecision:
    """Filter decision for one record; parse failures pass fail-open."""
    ast = record.ast
    if ast is None:
        return StructuralDecision(record.method_id, True, "parse_failure")
    result = embed(pattern, ast)
    return StructuralDecision(record.method_id, result.matched, "match" if result.matched else "")


def filter_corpus(
    pattern: StructuralPattern, records: list[MethodRecord]
) -> tuple[list[MethodRecord], list[MethodRecord], float]:
    """Partition records by embedding; parse failures pass through."""
    passed, excluded = [], []
    for record in records:
        (passed if decide(pattern, record).passed else excluded).append(record)
    reduction = len(excluded) / len(records) if records else 0.0
    return passed, excluded, reduction
