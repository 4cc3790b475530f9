"""Lossless tokenizer for Java method/file text.

The lexer never drops bytes: concatenating the ``text`` of all tokens
reproduces the input exactly. Comments and string/char literals are single
tokens, so identifier-like text inside them never leaks into keyword or
identifier matching downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# Java reserved words (JLS keywords plus the reserved literals true/false/null).
JAVA_KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while
    true false null
    """.split()
)

# Longest-match first.
OPERATORS = [
    ">>>=", ">>>", "<<=", ">>=", "->", "::", "==", "!=", "<=", ">=", "&&",
    "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
    ">>", "...", "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "&", "|",
    "^", "?", ":", "@",
]
PUNCTUATION = set("(){}[];,.")

_NUMBER_RE = re.compile(
    r"""
    0[xX][0-9a-fA-F_]+[lL]?              # hex
    | 0[bB][01_]+[lL]?                   # binary
    | (?:\d[\d_]*\.?[\d_]*|\.\d[\d_]*)   # decimal/float body
      (?:[eE][+-]?\d[\d_]*)?             # exponent
      [fFdDlL]?                          # suffix
    """,
    re.VERBOSE,
)
_WORD_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")
_WS_RE = re.compile(r"\s+")

_OPERATOR_RE = re.compile("|".join(re.escape(op) for op in OPERATORS))


class LexError(ValueError):
    """Raised for inputs the lexer must reject (bad encoding)."""


@dataclass(frozen=True)
class Token:
    """One source token.

    ``offset`` is the UTF-8 byte offset of the token start within the lexed
    text, so spans remain meaningful for corpora containing non-ASCII
    comments.
    """

    kind: str  # identifier|keyword|operator|literal-number|literal-string|literal-char|punctuation|comment|whitespace
    text: str
    offset: int

    @property
    def end_offset(self) -> int:
        return self.offset + len(self.text.encode("utf-8"))


def _scan_string(source: str, i: int, quote: str, warnings: list[str]) -> int:
    """Return the end index of a string/char literal starting at ``i``."""
    # Text blocks: three double quotes.
    if quote == '"' and source.startswith('"""', i):
        end = source.find('"""', i + 3)
        if end == -1:
            warnings.append("unterminated text block")
            return len(source)
        return end + 3
    j = i + 1
    while j < len(source):
        ch = source[j]
        if ch == "\\":
            j += 2
            continue
        if ch == quote:
            return j + 1
        if ch == "\n" and quote == "'":
            # Char literals do not span lines; recover at the newline.
            warnings.append("unterminated char literal")
            return j
        j += 1
    warnings.append("unterminated string literal" if quote == '"' else "unterminated char literal")
    return len(source)


def tokenize(source: str, warnings: list[str] | None = None) -> list[Token]:
    """Tokenize Java source text losslessly.

    ``warnings`` (optional) collects diagnostics for lenient recoveries such
    as unterminated strings or comments, which are emitted as single tokens
    extending to end of input.
    """
    if not isinstance(source, str):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise LexError(f"source is not valid UTF-8: {exc}") from exc
    if warnings is None:
        warnings = []

    tokens: list[Token] = []
    i = 0
    byte_offset = 0
    n = len(source)

    def emit(kind: str, end: int) -> None:
        nonlocal i, byte_offset
        text = source[i:end]
        tokens.append(Token(kind, text, byte_offset))
        byte_offset += len(text.encode("utf-8"))
        i = end

    while i < n:
        ch = source[i]
        if ch.isspace():
            m = _WS_RE.match(source, i)
            emit("whitespace", m.end())
            continue
        if source.startswith("//", i):
            end = source.find("\n", i)
            emit("comment", n if end == -1 else end)
            continue
        if source.startswith("/*", i):
            end = source.find("*/", i + 2)
            if end == -1:
                warnings.append("unterminated block comment")
                emit("comment", n)
            else:
                emit("comment", end + 2)
            continue
        if ch == '"':
            emit("literal-string", _scan_string(source, i, '"', warnings))
            continue
        if ch == "'":
            emit("literal-char", _scan_string(source, i, "'", warnings))
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            m = _NUMBER_RE.match(source, i)
            emit("literal-number", m.end())
            continue
        m = _WORD_RE.match(source, i)
        if m:
            word = m.group()
            emit("keyword" if word in JAVA_KEYWORDS else "identifier", m.end())
            continue
        m = _OPERATOR_RE.match(source, i)
        if m:
            emit("operator", m.end())
            continue
        if ch in PUNCTUATION:
            emit("punctuation", i + 1)
            continue
        # Anything else (stray unicode, backslash, '#') is kept as punctuation
        # so lexing stays lossless on noisy corpora.
        emit("punctuation", i + 1)

    return tokens


def is_code(token: Token) -> bool:
    """True for tokens that carry program structure (not ws/comments)."""
    return token.kind not in ("whitespace", "comment")


def code_tokens(tokens: list[Token]) -> list[Token]:
    return [t for t in tokens if is_code(t)]
