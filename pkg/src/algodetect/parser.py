"""Recursive-descent parser for the Java subset used by structural matching.

The grammar covers declarations, statements, loops, conditionals,
assignments, calls, array accesses, binary/unary expressions, returns and
literals. Anything else (switch bodies, try/catch internals, lambdas,
local classes) becomes ``kind="other"`` with recognizable children rather
than being dropped. Recovery is at statement granularity: an unparseable
statement is skipped to the next ';' or closing '}' and surfaces as an
``other`` node tagged "unparsed".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .lexer import Token, code_tokens, tokenize

PRIMITIVE_TYPES = frozenset("boolean byte char short int long float double void".split())

ASSIGN_OPS = frozenset(["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="])

# Binary operator precedence, lowest first.
BINARY_LEVELS = [
    ("||",),
    ("&&",),
    ("|",),
    ("^",),
    ("&",),
    ("==", "!="),
    ("<", ">", "<=", ">=", "instanceof"),
    ("<<", ">>", ">>>"),
    ("+", "-"),
    ("*", "/", "%"),
]

AST_KINDS = (
    "method", "block", "loop", "if", "assign", "var-decl", "array-access",
    "call", "return", "binary-op", "unary-op", "identifier-ref", "literal",
    "other",
)


@dataclass
class AstNode:
    """Typed syntax-tree node.

    ``role`` records the node's structural role under its parent (target,
    source, condition, body) when one applies; pattern matching uses it to
    resolve role-restricted pattern children.
    """

    kind: str
    attrs: dict = field(default_factory=dict)
    children: list["AstNode"] = field(default_factory=list)
    span: tuple[int, int] = (0, 0)
    role: Optional[str] = None

    def walk(self) -> Iterator["AstNode"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def node_count(self) -> int:
        return sum(1 for _ in self.walk())

    def shape(self) -> tuple:
        """Kind/arity tree with name-like attrs removed; used to compare
        structure irrespective of identifier renaming."""
        return (self.kind, tuple(child.shape() for child in self.children))


class ParseFail(Exception):
    """Internal signal: the parser cannot make sense of the input here."""


def canonical_expr_text(fragment: str | list[Token]) -> str:
    """Canonical text of an expression: whitespace-normalized, outer parens
    stripped, no algebraic rewriting ("i+1" and "1+i" stay different)."""
    if isinstance(fragment, str):
        toks = code_tokens(tokenize(fragment))
    else:
        toks = [t for t in fragment if t.kind not in ("whitespace", "comment")]
    toks = _strip_outer_parens(toks)
    out: list[str] = []
    wordish = ("identifier", "keyword", "literal-number")
    for idx, tok in enumerate(toks):
        if idx and tok.kind in wordish and toks[idx - 1].kind in wordish:
            out.append(" ")
        out.append(tok.text)
    return "".join(out)


# Spec-facing alias: array indices are the main consumer.
canonical_index_text = canonical_expr_text


def _strip_outer_parens(toks: list[Token]) -> list[Token]:
    while len(toks) >= 2 and toks[0].text == "(" and toks[-1].text == ")":
        depth = 0
        enclosing = True
        for idx, tok in enumerate(toks):
            if tok.text == "(":
                depth += 1
            elif tok.text == ")":
                depth -= 1
                if depth == 0 and idx != len(toks) - 1:
                    enclosing = False
                    break
        if not enclosing:
            break
        toks = toks[1:-1]
    return toks


class _Parser:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.pos = 0

    # -- token helpers ----------------------------------------------------

    def peek(self, ahead: int = 0) -> Optional[Token]:
        idx = self.pos + ahead
        return self.toks[idx] if idx < len(self.toks) else None

    def at(self, text: str, ahead: int = 0) -> bool:
        tok = self.peek(ahead)
        return tok is not None and tok.text == text

    def take(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseFail("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok is None or tok.text != text:
            raise ParseFail(f"expected {text!r}")
        return self.take()

    def span_from(self, start_pos: int) -> tuple[int, int]:
        if start_pos >= len(self.toks) or self.pos == start_pos:
            tok = self.toks[min(start_pos, len(self.toks) - 1)]
            return (tok.offset, tok.offset)
        return (self.toks[start_pos].offset, self.toks[self.pos - 1].end_offset)

    def skip_balanced(self, open_text: str, close_text: str) -> None:
        depth = 0
        while True:
            tok = self.take()
            if tok.text == open_text:
                depth += 1
            elif tok.text == close_text:
                depth -= 1
                if depth == 0:
                    return

    # -- types ------------------------------------------------------------

    def try_scan_type(self, start: int) -> Optional[int]:
        """If a type starts at ``start``, return the position just after it."""
        pos = start
        tok = self.toks[pos] if pos < len(self.toks) else None
        if tok is None:
            return None
        if tok.text in PRIMITIVE_TYPES:
            pos += 1
        elif tok.kind == "identifier":
            pos += 1
            while pos + 1 < len(self.toks) and self.toks[pos].text == "." and self.toks[pos + 1].kind == "identifier":
                pos += 2
            if pos < len(self.toks) and self.toks[pos].text == "<":
                depth = 0
                scan = pos
                while scan < len(self.toks):
                    text = self.toks[scan].text
                    if text == "<":
                        depth += 1
                    elif text == ">":
                        depth -= 1
                        if depth == 0:
                            break
                    elif text == ">>":
                        depth -= 2
                        if depth <= 0:
                            break
                    elif text in (";", "{", "}", ")") or text in ASSIGN_OPS:
                        return None
                    scan += 1
                else:
                    return None
                if depth > 0:
                    return None
                pos = scan + 1
        else:
            return None
        while pos + 1 < len(self.toks) and self.toks[pos].text == "[" and self.toks[pos + 1].text == "]":
            pos += 2
        return pos

    def type_text(self, start: int, end: int) -> str:
        return canonical_expr_text(self.toks[start:end])

    # -- statements -------------------------------------------------------

    def parse_block(self) -> AstNode:
        start = self.pos
        self.expect("{")
        children: list[AstNode] = []
        while not self.at("}"):
            if self.peek() is None:
                raise ParseFail("unterminated block")
            children.extend(self.parse_statement())
        self.expect("}")
        return AstNode("block", {}, children, self.span_from(start))

    def parse_statement(self) -> list[AstNode]:
        """Parse one statement; returns zero or more nodes (a multi-variable
        declaration yields one var-decl per declarator)."""
        start = self.pos
        try:
            return self._statement_inner()
        except ParseFail:
            self.pos = start
            return [self._recover_statement()]

    def _recover_statement(self) -> AstNode:
        start = self.pos
        depth = 0
        while self.peek() is not None:
            text = self.peek().text
            if text == "{":
                depth += 1
            elif text == "}":
                if depth == 0:
                    break
                depth -= 1
            elif text == ";" and depth == 0:
                self.take()
                break
            self.take()
        if self.pos == start:
            self.take()
        return AstNode("other", {"op": "unparsed"}, [], self.span_from(start))

    def _statement_inner(self) -> list[AstNode]:
        tok = self.peek()
        if tok is None:
            raise ParseFail("no statement")
        text = tok.text

        if text == ";":
            self.take()
            return []
        if text == "{":
            return [self.parse_block()]
        if text == "for":
            return [self.parse_for()]
        if text == "while":
            return [self.parse_while()]
        if text == "do":
            return [self.parse_do()]
        if text == "if":
            return [self.parse_if()]
        if text == "return":
            return [self.parse_return()]
        if text in ("break", "continue"):
            start = self.pos
            self.take()
            if self.peek() is not None and self.peek().kind == "identifier":
                self.take()
            if self.at(";"):
                self.take()
            return [AstNode("other", {"op": text}, [], self.span_from(start))]
        if text == "throw":
            start = self.pos
            self.take()
            expr = self.parse_expression()
            if self.at(";"):
                self.take()
            return [AstNode("other", {"op": "throw"}, [expr], self.span_from(start))]
        if text == "try":
            return [self.parse_try()]
        if text == "switch":
            return [self.parse_switch()]
        if text == "synchronized" and self.at("(", 1):
            start = self.pos
            self.take()
            self.expect("(")
            expr = self.parse_expression()
            self.expect(")")
            body = self.parse_block()
            body.role = "body"
            return [AstNode("other", {"op": "synchronized"}, [expr, body], self.span_from(start))]
        if text in ("assert",):
            start = self.pos
            self.take()
            expr = self.parse_expression()
            children = [expr]
            if self.at(":"):
                self.take()
                children.append(self.parse_expression())
            if self.at(";"):
                self.take()
            return [AstNode("other", {"op": "assert"}, children, self.span_from(start))]
        if text in ("class", "interface", "enum"):
            start = self.pos
            while self.peek() is not None and not self.at("{"):
                self.take()
            if self.peek() is None:
                raise ParseFail("class declaration without body")
            self.skip_balanced("{", "}")
            return [AstNode("other", {"op": text}, [], self.span_from(start))]
        # Labeled statement: identifier ':' statement
        if tok.kind == "identifier" and self.at(":", 1):
            start = self.pos
            label = self.take().text
            self.take()
            inner = self.parse_statement()
            return [AstNode("other", {"op": "label", "name": label}, inner, self.span_from(start))]

        decls = self.try_parse_var_decls()
        if decls is not None:
            return decls

        start = self.pos
        expr = self.parse_expression()
        if self.at(";"):
            self.take()
        elif self.peek() is not None and not self.at("}"):
            raise ParseFail("expression statement not terminated")
        expr.span = self.span_from(start)
        return [expr]

    def try_parse_var_decls(self, stop_at_colon: bool = False) -> Optional[list[AstNode]]:
        """Attempt ``[final] Type name [= expr] (, name [= expr])* ;``."""
        probe = self.pos
        if probe < len(self.toks) and self.toks[probe].text == "final":
            probe += 1
        after_type = self.try_scan_type(probe)
        if after_type is None or after_type >= len(self.toks):
            return None
        name_tok = self.toks[after_type]
        if name_tok.kind != "identifier":
            return None
        follow = self.toks[after_type + 1].text if after_type + 1 < len(self.toks) else ""
        allowed = {"=", ";", ",", "["}
        if stop_at_colon:
            allowed |= {":", ")"}
        if follow not in allowed:
            return None

        type_start = probe if self.toks[self.pos].text != "final" else self.pos + 1
        type_str = self.type_text(type_start, after_type)
        self.pos = after_type
        nodes: list[AstNode] = []
        while True:
            start = self.pos
            name = self.expect_identifier()
            while self.at("[") and self.at("]", 1):
                self.take()
                self.take()
            attrs = {"name": name, "type": type_str}
            children: list[AstNode] = []
            if self.at("="):
                self.take()
                init = self.parse_var_init()
                init.role = "source"
                children.append(init)
            nodes.append(AstNode("var-decl", attrs, children, self.span_from(start)))
            if stop_at_colon and (self.at(":") or self.at(")")):
                return nodes
            if self.at(","):
                self.take()
                continue
            self.expect(";")
            return nodes

    def parse_var_init(self) -> AstNode:
        if self.at("{"):
            start = self.pos
            self.take()
            children = []
            while not self.at("}"):
                if self.peek() is None:
                    raise ParseFail("unterminated array initializer")
                children.append(self.parse_var_init())
                if self.at(","):
                    self.take()
            self.take()
            return AstNode("other", {"op": "array-init"}, children, self.span_from(start))
        return self.parse_expression()

    def expect_identifier(self) -> str:
        tok = self.peek()
        if tok is None or tok.kind != "identifier":
            raise ParseFail("expected identifier")
        return self.take().text

    def parse_for(self) -> AstNode:
        start = self.pos
        self.expect("for")
        self.expect("(")

        # for-each: for (Type name : iterable)
        probe = self.pos
        decls = None
        try:
            decls = self.try_parse_var_decls(stop_at_colon=True)
        except ParseFail:
            self.pos = probe
            decls = None
        if decls is not None and self.at(":"):
            self.take()
            iterable = self.parse_expression()
            iterable.role = "source"
            self.expect(")")
            body = self.parse_loop_body()
            return AstNode(
                "loop", {"form": "foreach"}, decls + [iterable, body], self.span_from(start)
            )
        if decls is not None and self.at(";"):
            # try_parse_var_decls(stop_at_colon=True) stops before ';' only
            # via ')' — rewind and parse as a classic for init below.
            pass
        self.pos = probe

        children: list[AstNode] = []
        if not self.at(";"):
            init = self.try_parse_var_decls()
            if init is not None:
                children.extend(init)
            else:
                children.append(self.parse_expression())
                while self.at(","):
                    self.take()
                    children.append(self.parse_expression())
                self.expect(";")
        else:
            self.take()
        if not self.at(";"):
            cond = self.parse_expression()
            cond.role = "condition"
            children.append(cond)
        self.expect(";")
        if not self.at(")"):
            children.append(self.parse_expression())
            while self.at(","):
                self.take()
                children.append(self.parse_expression())
        self.expect(")")
        children.append(self.parse_loop_body())
        return AstNode("loop", {"form": "for"}, children, self.span_from(start))

    def parse_loop_body(self) -> AstNode:
        stmts = self.parse_statement()
        if len(stmts) == 1:
            stmts[0].role = "body"
            return stmts[0]
        node = AstNode("block", {}, stmts, self._stmts_span(stmts))
        node.role = "body"
        return node

    def _stmts_span(self, stmts: list[AstNode]) -> tuple[int, int]:
        if not stmts:
            tok = self.toks[self.pos - 1] if self.pos else self.toks[0]
            return (tok.offset, tok.end_offset)
        return (stmts[0].span[0], stmts[-1].span[1])

    def parse_while(self) -> AstNode:
        start = self.pos
        self.expect("while")
        self.expect("(")
        cond = self.parse_expression()
        cond.role = "condition"
        self.expect(")")
        body = self.parse_loop_body()
        return AstNode("loop", {"form": "while"}, [cond, body], self.span_from(start))

    def parse_do(self) -> AstNode:
        start = self.pos
        self.expect("do")
        body = self.parse_loop_body()
        self.expect("while")
        self.expect("(")
        cond = self.parse_expression()
        cond.role = "condition"
        self.expect(")")
        if self.at(";"):
            self.take()
        return AstNode("loop", {"form": "do"}, [body, cond], self.span_from(start))

    def parse_if(self) -> AstNode:
        start = self.pos
        self.expect("if")
        self.expect("(")
        cond = self.parse_expression()
        cond.role = "condition"
        self.expect(")")
        then = self.parse_branch_body()
        children = [cond, then]
        if self.at("else"):
            self.take()
            if self.at("if"):
                alt = self.parse_if()
            else:
                alt = self.parse_branch_body()
            alt.role = "body"
            children.append(alt)
        return AstNode("if", {}, children, self.span_from(start))

    def parse_branch_body(self) -> AstNode:
        stmts = self.parse_statement()
        if len(stmts) == 1:
            stmts[0].role = "body"
            return stmts[0]
        node = AstNode("block", {}, stmts, self._stmts_span(stmts))
        node.role = "body"
        return node

    def parse_return(self) -> AstNode:
        start = self.pos
        self.expect("return")
        children = []
        if not self.at(";"):
            value = self.parse_expression()
            value.role = "source"
            children.append(value)
        if self.at(";"):
            self.take()
        return AstNode("return", {}, children, self.span_from(start))

    def parse_try(self) -> AstNode:
        start = self.pos
        self.expect("try")
        children: list[AstNode] = []
        if self.at("("):
            # try-with-resources: parse declarations leniently
            self.take()
            while not self.at(")"):
                if self.peek() is None:
                    raise ParseFail("unterminated resource list")
                decls = self.try_parse_var_decls(stop_at_colon=True)
                if decls is None:
                    self.take()
                else:
                    children.extend(decls)
                    if self.at("="):
                        self.take()
                        children.append(self.parse_expression())
                if self.at(";"):
                    self.take()
            self.take()
        children.append(self.parse_block())
        while self.at("catch"):
            self.take()
            self.expect("(")
            ctype_start = self.pos
            while not self.at(")") and self.peek() is not None:
                self.take()
            param_span = self.span_from(ctype_start)
            if self.pos - 1 >= ctype_start and self.toks[self.pos - 1].kind == "identifier":
                children.append(
                    AstNode(
                        "var-decl",
                        {"name": self.toks[self.pos - 1].text, "type": "caught"},
                        [],
                        param_span,
                    )
                )
            self.expect(")")
            children.append(self.parse_block())
        if self.at("finally"):
            self.take()
            children.append(self.parse_block())
        return AstNode("other", {"op": "try"}, children, self.span_from(start))

    def parse_switch(self) -> AstNode:
        start = self.pos
        self.expect("switch")
        self.expect("(")
        selector = self.parse_expression()
        self.expect(")")
        children = [selector]
        self.expect("{")
        while not self.at("}"):
            if self.peek() is None:
                raise ParseFail("unterminated switch")
            if self.at("case"):
                self.take()
                while not (self.at(":") or self.at("->")) and self.peek() is not None:
                    self.take()
                if self.peek() is not None:
                    self.take()
                continue
            if self.at("default"):
                self.take()
                if self.at(":") or self.at("->"):
                    self.take()
                continue
            children.extend(self.parse_statement())
        self.expect("}")
        return AstNode("other", {"op": "switch"}, children, self.span_from(start))

    # -- expressions ------------------------------------------------------

    def parse_expression(self) -> AstNode:
        return self.parse_assignment()

    def parse_assignment(self) -> AstNode:
        start = self.pos
        lhs = self.parse_ternary()
        tok = self.peek()
        if tok is not None and tok.text in ASSIGN_OPS:
            op = self.take().text
            rhs = self.parse_assignment()
            lhs.role = "target"
            rhs.role = "source"
            attrs = {} if op == "=" else {"op": op}
            return AstNode("assign", attrs, [lhs, rhs], self.span_from(start))
        return lhs

    def parse_ternary(self) -> AstNode:
        start = self.pos
        cond = self.parse_binary(0)
        if self.at("?"):
            self.take()
            then = self.parse_expression()
            self.expect(":")
            alt = self.parse_ternary()
            cond.role = "condition"
            return AstNode("other", {"op": "?:"}, [cond, then, alt], self.span_from(start))
        return cond

    def parse_binary(self, level: int) -> AstNode:
        if level >= len(BINARY_LEVELS):
            return self.parse_unary()
        start = self.pos
        node = self.parse_binary(level + 1)
        while True:
            tok = self.peek()
            if tok is None or tok.text not in BINARY_LEVELS[level]:
                return node
            op = self.take().text
            if op == "instanceof":
                rhs = self.parse_type_ref()
            else:
                rhs = self.parse_binary(level + 1)
            node = AstNode("binary-op", {"op": op}, [node, rhs], self.span_from(start))

    def parse_type_ref(self) -> AstNode:
        after = self.try_scan_type(self.pos)
        if after is None:
            raise ParseFail("expected type")
        text = self.type_text(self.pos, after)
        span = (self.toks[self.pos].offset, self.toks[after - 1].end_offset)
        self.pos = after
        return AstNode("identifier-ref", {"name": text}, [], span)

    def _looks_like_cast(self) -> bool:
        if not self.at("("):
            return False
        after = self.try_scan_type(self.pos + 1)
        if after is None or after >= len(self.toks) or self.toks[after].text != ")":
            return False
        nxt = self.toks[after + 1] if after + 1 < len(self.toks) else None
        if nxt is None:
            return False
        inner_first = self.toks[self.pos + 1]
        primitive = inner_first.text in PRIMITIVE_TYPES
        if primitive:
            return nxt.kind in ("identifier", "literal-number", "literal-string", "literal-char") or nxt.text in ("(", "-", "+", "~", "!") or nxt.text in ("this", "super", "new")
        return nxt.kind in ("identifier", "literal-string", "literal-char") or nxt.text in ("(", "new", "this", "super")

    def parse_unary(self) -> AstNode:
        tok = self.peek()
        if tok is None:
            raise ParseFail("expected expression")
        if tok.text in ("+", "-", "!", "~", "++", "--"):
            start = self.pos
            op = self.take().text
            operand = self.parse_unary()
            return AstNode("unary-op", {"op": op}, [operand], self.span_from(start))
        if self._looks_like_cast():
            start = self.pos
            self.take()
            type_node = self.parse_type_ref()
            self.expect(")")
            operand = self.parse_unary()
            return AstNode(
                "other", {"op": "cast", "name": type_node.attrs["name"]}, [operand], self.span_from(start)
            )
        return self.parse_postfix()

    def _lambda_ahead(self) -> bool:
        if self.peek() is not None and self.peek().kind == "identifier" and self.at("->", 1):
            return True
        if not self.at("("):
            return False
        depth = 0
        scan = self.pos
        while scan < len(self.toks):
            text = self.toks[scan].text
            if text == "(":
                depth += 1
            elif text == ")":
                depth -= 1
                if depth == 0:
                    return scan + 1 < len(self.toks) and self.toks[scan + 1].text == "->"
            elif text in (";", "{"):
                return False
            scan += 1
        return False

    def parse_lambda(self) -> AstNode:
        start = self.pos
        if self.at("("):
            self.skip_balanced("(", ")")
        else:
            self.take()
        self.expect("->")
        body = self.parse_block() if self.at("{") else self.parse_expression()
        return AstNode("other", {"op": "lambda"}, [body], self.span_from(start))

    def parse_postfix(self) -> AstNode:
        start = self.pos
        node = self.parse_primary()
        while True:
            if self.at("."):
                nxt = self.peek(1)
                if nxt is None:
                    raise ParseFail("dangling '.'")
                if nxt.text == "new":
                    self.take()
                    self.take()
                    node = AstNode("other", {"op": "inner-new"}, [node], self.span_from(start))
                    continue
                if nxt.kind != "identifier" and nxt.text != "class" and nxt.text != "this":
                    raise ParseFail("expected member name")
                self.take()
                name = self.take().text
                if self.at("("):
                    args = self.parse_args()
                    node = AstNode("call", {"name": name}, [node] + args, self.span_from(start))
                elif node.kind == "identifier-ref" and not node.children:
                    node = AstNode(
                        "identifier-ref", {"name": node.attrs["name"] + "." + name}, [], self.span_from(start)
                    )
                else:
                    node = AstNode("other", {"op": "field", "name": name}, [node], self.span_from(start))
                continue
            if self.at("["):
                node = self.parse_array_access(node, start)
                continue
            if self.at("::"):
                self.take()
                if self.peek() is not None and (self.peek().kind == "identifier" or self.at("new")):
                    name = self.take().text
                    node = AstNode("other", {"op": "method-ref", "name": name}, [node], self.span_from(start))
                    continue
                raise ParseFail("dangling '::'")
            if self.at("++") or self.at("--"):
                op = self.take().text
                node = AstNode("unary-op", {"op": op, "postfix": "true"}, [node], self.span_from(start))
                continue
            return node

    def parse_array_access(self, base: AstNode, start: int) -> AstNode:
        indices: list[str] = []
        children: list[AstNode] = [base]
        while self.at("["):
            self.take()
            idx_start = self.pos
            idx = self.parse_expression()
            indices.append(canonical_expr_text(self.toks[idx_start:self.pos]))
            self.expect("]")
            children.append(idx)
        return AstNode(
            "array-access", {"indices": tuple(indices)}, children, self.span_from(start)
        )

    def parse_args(self) -> list[AstNode]:
        self.expect("(")
        args: list[AstNode] = []
        while not self.at(")"):
            if self.peek() is None:
                raise ParseFail("unterminated argument list")
            args.append(self.parse_expression())
            if self.at(","):
                self.take()
        self.take()
        return args

    def parse_primary(self) -> AstNode:
        tok = self.peek()
        if tok is None:
            raise ParseFail("expected expression")
        start = self.pos
        if self._lambda_ahead():
            return self.parse_lambda()
        if tok.kind in ("literal-number", "literal-string", "literal-char"):
            self.take()
            return AstNode("literal", {"value": tok.text}, [], self.span_from(start))
        if tok.text in ("true", "false", "null"):
            self.take()
            return AstNode("literal", {"value": tok.text}, [], self.span_from(start))
        if tok.text == "(":
            self.take()
            inner = self.parse_expression()
            self.expect(")")
            return inner
        if tok.text == "new":
            return self.parse_new()
        if tok.text in ("this", "super"):
            self.take()
            if self.at("("):
                args = self.parse_args()
                return AstNode("call", {"name": tok.text}, args, self.span_from(start))
            return AstNode("identifier-ref", {"name": tok.text}, [], self.span_from(start))
        if tok.text in PRIMITIVE_TYPES:
            # e.g. int.class, double[].class
            self.take()
            while self.at("[") and self.at("]", 1):
                self.take()
                self.take()
            return AstNode("identifier-ref", {"name": tok.text}, [], self.span_from(start))
        if tok.kind == "identifier":
            self.take()
            if self.at("("):
                args = self.parse_args()
                return AstNode("call", {"name": tok.text}, args, self.span_from(start))
            return AstNode("identifier-ref", {"name": tok.text}, [], self.span_from(start))
        raise ParseFail(f"unexpected token {tok.text!r}")

    def parse_new(self) -> AstNode:
        start = self.pos
        self.expect("new")
        after = self.try_scan_type(self.pos)
        if after is None:
            raise ParseFail("expected type after new")
        # try_scan_type consumes any [] pairs; rescan to find where the bare
        # type name ends so sized array creation still sees its '['.
        scan = self.pos
        tok = self.toks[scan]
        if tok.text in PRIMITIVE_TYPES:
            scan += 1
        else:
            scan += 1
            while scan + 1 < len(self.toks) and self.toks[scan].text == "." and self.toks[scan + 1].kind == "identifier":
                scan += 2
            if scan < len(self.toks) and self.toks[scan].text == "<":
                depth = 0
                while scan < len(self.toks):
                    if self.toks[scan].text == "<":
                        depth += 1
                    elif self.toks[scan].text == ">":
                        depth -= 1
                        if depth == 0:
                            scan += 1
                            break
                    elif self.toks[scan].text == ">>":
                        depth -= 2
                        if depth <= 0:
                            scan += 1
                            break
                    scan += 1
        type_name = canonical_expr_text(self.toks[self.pos:scan])
        self.pos = scan
        if self.at("("):
            args = self.parse_args()
            node = AstNode("call", {"name": type_name, "new": "true"}, args, self.span_from(start))
            if self.at("{"):
                body_start = self.pos
                self.skip_balanced("{", "}")
                node.children.append(
                    AstNode("other", {"op": "anon-class"}, [], self.span_from(body_start))
                )
                node.span = self.span_from(start)
            return node
        # array creation: new T[expr]... or new T[]{...}
        sizes: list[AstNode] = []
        while self.at("["):
            self.take()
            if not self.at("]"):
                sizes.append(self.parse_expression())
            self.expect("]")
        if self.at("{"):
            sizes.append(self.parse_var_init())
        return AstNode("other", {"op": "new-array", "name": type_name}, sizes, self.span_from(start))


def _flag_recursion(root: AstNode, method_name: str) -> None:
    for node in root.walk():
        if node.kind == "call" and node.attrs.get("name") == method_name and "new" not in node.attrs:
            node.attrs["recursive"] = "true"


def parse_method(record) -> Optional[AstNode]:
    """Parse one MethodRecord into an AST; returns None on parse failure."""
    toks = code_tokens(record.tokens)
    if not toks:
        return None
    parser = _Parser(toks)
    try:
        # Locate the signature: the declared name followed by '(' ... ')' then
        # an optional throws clause and the body.
        sig = None
        for idx in range(len(toks) - 1):
            if (
                toks[idx].kind == "identifier"
                and toks[idx + 1].text == "("
                and (idx == 0 or toks[idx - 1].text not in ("new", "@", "."))
            ):
                sig = idx
                break
        if sig is None:
            return None
        name = toks[sig].text
        parser.pos = sig + 1
        params: list[AstNode] = []
        parser.expect("(")
        while not parser.at(")"):
            if parser.peek() is None:
                return None
            if parser.at(","):
                parser.take()
                continue
            if parser.at("final"):
                parser.take()
                continue
            decl_start = parser.pos
            after = parser.try_scan_type(parser.pos)
            if after is None:
                parser.take()
                continue
            type_str = parser.type_text(parser.pos, after)
            parser.pos = after
            while parser.at("...") or (parser.at("[") and parser.at("]", 1)):
                if parser.at("..."):
                    parser.take()
                else:
                    parser.take()
                    parser.take()
            if parser.peek() is not None and parser.peek().kind == "identifier":
                pname = parser.take().text
                while parser.at("[") and parser.at("]", 1):
                    parser.take()
                    parser.take()
                params.append(
                    AstNode("var-decl", {"name": pname, "type": type_str}, [], parser.span_from(decl_start))
                )
            # else: token was part of an unrecognized param shape; loop continues
        parser.take()
        if parser.at("throws"):
            parser.take()
            while parser.peek() is not None and not parser.at("{"):
                parser.take()
        if not parser.at("{"):
            return None
        body = parser.parse_block()
        body.role = "body"
        span = (toks[0].offset, toks[-1].end_offset)
        root = AstNode("method", {"name": name}, params + [body], span)
        _flag_recursion(root, name)
        return root
    except (ParseFail, RecursionError):
        return None
