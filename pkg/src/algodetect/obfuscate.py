"""Identifier obfuscation: rename method-declared names to random strings.

Only names declared inside the method are renamed: the method's own name,
parameters, local/loop/catch variables. References to anything declared
elsewhere (library calls, types, fields of other classes) survive, so the
transformation removes naming cues without breaking the code's external
vocabulary. Fresh names are seeded 8-char lowercase strings, never reserved
words, and never text that already occurs in the original source.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

from .corpus import MethodRecord
from .lexer import JAVA_KEYWORDS, Token
from .parser import PRIMITIVE_TYPES

NAME_LENGTH = 8


@dataclass
class RenamePlan:
    seed: int
    mapping: dict[str, str]
    scope: set[str]


def declared_names(record: MethodRecord) -> set[str]:
    """Names declared inside the method (incl. the method name itself)."""
    names = {record.name}
    ast = record.ast
    if ast is not None:
        for node in ast.walk():
            if node.kind == "var-decl":
                names.add(node.attrs["name"])
        return names
    names.update(_token_scan_declarations(record))
    return names


def _token_scan_declarations(record: MethodRecord) -> set[str]:
    """Declaration heuristic for methods the parser could not handle."""
    toks = [t for t in record.tokens if t.kind not in ("whitespace", "comment")]
    names: set[str] = set()

    # Parameters: identifiers directly before ',' or ')' in the signature.
    try:
        name_idx = next(
            i
            for i in range(len(toks) - 1)
            if toks[i].kind == "identifier"
            and toks[i].text == record.name
            and toks[i + 1].text == "("
        )
        depth = 0
        for i in range(name_idx + 1, len(toks)):
            text = toks[i].text
            if text == "(":
                depth += 1
            elif text == ")":
                depth -= 1
                if depth == 0:
                    if toks[i - 1].kind == "identifier" and toks[i - 1].text != record.name:
                        names.add(toks[i - 1].text)
                    break
            elif text == "," and depth == 1 and toks[i - 1].kind == "identifier":
                names.add(toks[i - 1].text)
    except StopIteration:
        pass

    # Locals: identifier after a type-looking token, followed by =, ; or ','.
    in_decl = False
    for i in range(1, len(toks) - 1):
        tok = toks[i]
        if tok.kind != "identifier":
            if tok.text in (";", ")", "}"):
                in_decl = False
            continue
        prev, nxt = toks[i - 1], toks[i + 1]
        type_like = (
            prev.kind == "identifier"
            or prev.text in PRIMITIVE_TYPES
            or prev.text in ("]", ">")
        )
        if nxt.text in ("=", ";", ":") and type_like:
            names.add(tok.text)
            in_decl = nxt.text != ";"
        elif nxt.text == "," and type_like:
            names.add(tok.text)
            in_decl = True
        elif in_decl and prev.text == "," and nxt.text in ("=", ";", ","):
            names.add(tok.text)
            if nxt.text == ";":
                in_decl = False
    return names


def _fresh_name(rng: random.Random, forbidden: set[str], source: str) -> str:
    while True:
        name = "".join(rng.choice(string.ascii_lowercase) for _ in range(NAME_LENGTH))
        if name in JAVA_KEYWORDS or name in forbidden or name in source:
            continue
        return name


def plan(record: MethodRecord, seed: int) -> RenamePlan:
    """Build a deterministic rename plan for one method."""
    scope = declared_names(record)
    rng = random.Random(seed)
    mapping: dict[str, str] = {}
    taken: set[str] = set()
    for name in sorted(scope):
        fresh = _fresh_name(rng, taken, record.source)
        mapping[name] = fresh
        taken.add(fresh)
    return RenamePlan(seed=seed, mapping=mapping, scope=scope)


def apply(record: MethodRecord, rename: RenamePlan, strip_comments: bool = False) -> MethodRecord:
    """Rewrite the method with the plan's fresh names.

    Identifier tokens only; comments and string/char literals keep their
    text unless ``strip_comments`` removes comments wholesale.
    """
    pieces: list[str] = []
    for tok in record.tokens:
        if tok.kind == "comment" and strip_comments:
            continue
        if tok.kind == "identifier" and tok.text in rename.mapping:
            pieces.append(rename.mapping[tok.text])
        else:
            pieces.append(tok.text)
    new_source = "".join(pieces)
    meta = dict(record.meta)
    meta.update({"obfuscated": True, "seed": rename.seed})
    return MethodRecord(
        method_id=record.method_id,
        file_path=record.file_path,
        name=rename.mapping.get(record.name, record.name),
        source=new_source,
        meta=meta,
    )


def obfuscate_corpus(
    records: list[MethodRecord], seed: int, strip_comments: bool = False
) -> list[MethodRecord]:
    return [apply(rec, plan(rec, seed), strip_comments) for rec in records]
