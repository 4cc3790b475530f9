"""Method records and corpus ingestion.

A corpus is either a directory tree of ``.java`` files or a JSONL file with
one object per method: ``{method_id, file_path, name, source}``. Extraction
from ``.java`` files uses brace-balanced scanning from a method-signature
match; it tolerates non-compiling fragments and never raises on messy input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .lexer import LexError, Token, code_tokens, tokenize

MODIFIER_KEYWORDS = frozenset(
    "public private protected static final abstract native synchronized strictfp transient volatile default".split()
)


class CorpusError(ValueError):
    """Raised for unreadable or malformed corpus inputs."""


@dataclass
class MethodRecord:
    """One extracted method: identity, source text, token stream, optional AST."""

    method_id: str
    file_path: str
    name: str
    source: str
    meta: dict = field(default_factory=dict)
    _tokens: list[Token] | None = field(default=None, repr=False)
    _ast: object | None = field(default=None, repr=False)
    _parsed: bool = field(default=False, repr=False)

    @property
    def tokens(self) -> list[Token]:
        if self._tokens is None:
            self._tokens = tokenize(self.source)
        return self._tokens

    @property
    def ast(self):
        """Parsed AST root, or None if the parser could not recover."""
        if not self._parsed:
            from .parser import parse_method

            self._ast = parse_method(self)
            self._parsed = True
        return self._ast

    @property
    def ast_element_count(self) -> int:
        node = self.ast
        return 0 if node is None else node.node_count()

    def to_json(self) -> dict:
        row = {
            "method_id": self.method_id,
            "file_path": self.file_path,
            "name": self.name,
            "source": self.source,
        }
        row.update(self.meta)
        return row

    @classmethod
    def from_json(cls, row: dict) -> "MethodRecord":
        try:
            meta = {k: v for k, v in row.items() if k not in ("method_id", "file_path", "name", "source")}
            return cls(
                method_id=row["method_id"],
                file_path=row["file_path"],
                name=row["name"],
                source=row["source"],
                meta=meta,
            )
        except KeyError as exc:
            raise CorpusError(f"corpus row missing field {exc}") from exc


@dataclass
class ExtractionReport:
    records: list[MethodRecord]
    skipped_regions: int = 0
    rejected_files: list[str] = field(default_factory=list)


def _char_starts(tokens: list[Token]) -> list[int]:
    starts = []
    pos = 0
    for tok in tokens:
        starts.append(pos)
        pos += len(tok.text)
    starts.append(pos)
    return starts


def extract_methods(file_text: str, file_path: str) -> ExtractionReport:
    """Extract every method/constructor body from one Java source file.

    Signature detection: an identifier followed by a balanced parameter list
    and an opening brace (optionally after a throws clause), not preceded by
    ``new``, ``@`` or ``.``. Anonymous-inner-class methods stay inside their
    enclosing record; bodyless signatures and initializer blocks are skipped.
    Unbalanced braces abandon the rest of the file and are counted.
    """
    tokens = tokenize(file_text)
    starts = _char_starts(tokens)
    code = [(idx, tok) for idx, tok in enumerate(tokens) if tok.kind not in ("whitespace", "comment")]
    records: list[MethodRecord] = []
    skipped_regions = 0

    def match_paren(ci: int) -> int:
        """Index in ``code`` of the ')' matching the '(' at code index ci, or -1."""
        depth = 0
        for j in range(ci, len(code)):
            t = code[j][1].text
            if t == "(":
                depth += 1
            elif t == ")":
                depth -= 1
                if depth == 0:
                    return j
        return -1

    def match_brace(ci: int) -> int:
        depth = 0
        for j in range(ci, len(code)):
            t = code[j][1].text
            if t == "{":
                depth += 1
            elif t == "}":
                depth -= 1
                if depth == 0:
                    return j
        return -1

    def member_start(ci: int) -> int:
        """Token index where the member beginning at code index ci starts.

        Walk back to just after the previous ';', '{' or '}' so modifiers and
        the return type are included; leading whitespace/comments are not.
        """
        k = ci - 1
        while k >= 0 and code[k][1].text not in (";", "{", "}"):
            k -= 1
        tok_idx = code[k][0] + 1 if k >= 0 else 0
        while tok_idx < len(tokens) and tokens[tok_idx].kind in ("whitespace", "comment"):
            tok_idx += 1
        return tok_idx

    ci = 0
    while ci < len(code):
        tok = code[ci][1]
        # Skip initializer blocks: 'static {' or a bare '{' opening right
        # after another member boundary.
        if tok.text == "{" and ci > 0:
            prev = code[ci - 1][1].text
            if prev in (";", "}", "{") or prev == "static":
                end = match_brace(ci)
                if end == -1:
                    skipped_regions += 1
                    break
                ci = end + 1
                continue
        if tok.kind == "identifier" and ci + 1 < len(code) and code[ci + 1][1].text == "(":
            prev = code[ci - 1][1].text if ci > 0 else ""
            if prev in ("new", "@", "."):
                ci += 1
                continue
            close = match_paren(ci + 1)
            if close == -1:
                skipped_regions += 1
                break
            j = close + 1
            if j < len(code) and code[j][1].text == "throws":
                j += 1
                while j < len(code) and code[j][1].text not in ("{", ";"):
                    j += 1
            if j < len(code) and code[j][1].text == "{":
                body_end = match_brace(j)
                if body_end == -1:
                    skipped_regions += 1
                    break
                start_tok = member_start(ci)
                start_char = starts[start_tok]
                end_char = starts[code[body_end][0] + 1]
                source = file_text[start_char:end_char]
                line = file_text.count("\n", 0, start_char) + 1
                name = tok.text
                records.append(
                    MethodRecord(
                        method_id=f"{file_path}:{line}:{name}",
                        file_path=file_path,
                        name=name,
                        source=source,
                    )
                )
                ci = body_end + 1
                continue
            if j < len(code) and code[j][1].text == ";":
                ci = j + 1
                continue
            ci = close + 1
            continue
        ci += 1

    return ExtractionReport(records=records, skipped_regions=skipped_regions)


def _dedupe_ids(records: list[MethodRecord]) -> None:
    seen: dict[str, int] = {}
    for rec in records:
        count = seen.get(rec.method_id, 0)
        seen[rec.method_id] = count + 1
        if count:
            rec.method_id = f"{rec.method_id}#{count + 1}"


def extract_directory(root: Path) -> ExtractionReport:
    """Extract methods from every .java file under ``root``."""
    report = ExtractionReport(records=[])
    for path in sorted(root.rglob("*.java")):
        rel = path.relative_to(root).as_posix()
        try:
            text = path.read_bytes().decode("utf-8")
        except UnicodeDecodeError:
            report.rejected_files.append(rel)
            continue
        try:
            sub = extract_methods(text, rel)
        except LexError:
            report.rejected_files.append(rel)
            continue
        report.records.extend(sub.records)
        report.skipped_regions += sub.skipped_regions
    _dedupe_ids(report.records)
    return report


def load_corpus(path: str | Path) -> list[MethodRecord]:
    """Load a corpus from a directory tree of .java files or a JSONL file."""
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"corpus path does not exist: {path}")
    if path.is_dir():
        return extract_directory(path).records
    records = []
    with path.open("r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            records.append(MethodRecord.from_json(row))
    ids = [r.method_id for r in records]
    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise CorpusError(f"duplicate method_id in corpus: {dup}")
    return records


def save_corpus(records: Iterable[MethodRecord], path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        for rec in records:
            handle.write(json.dumps(rec.to_json(), ensure_ascii=False) + "\n")


def iter_jsonl(path: str | Path) -> Iterator[dict]:
    with Path(path).open("r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                yield json.loads(line)


def write_jsonl(rows: Iterable[dict], path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(json.dumps(row, ensure_ascii=False) + "\n")
