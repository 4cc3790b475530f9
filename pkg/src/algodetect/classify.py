"""Per-method classification and batched runs with caching.

Single-token styles (yes/no, score, ICL) never trust sampled text: the
decision reads the returned log-probabilities at the answer position,
restricted to the candidate answer tokens, which makes sampling parameters
irrelevant. Chain-of-thought samples up to its token budget and takes the
last standalone digit 0-4 as the score.
"""

from __future__ import annotations

import hashlib
import json
import logging
import re
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .backends import Backend, BackendError, BackendResponse, TransportError
from .corpus import MethodRecord
from .prompts import PromptStyle, build_prompt, canonical_algorithm

logger = logging.getLogger(__name__)

SCORE_CANDIDATES = ("0", "1", "2", "3", "4")
YES_NO_CANDIDATES = ("Yes", "No")
YES_SCORE, NO_SCORE = 4, 0

_LAST_DIGIT_RE = re.compile(r"(?<![\d.])([0-4])(?!\d)")

# Conservative context guard: methods longer than this are rejected rather
# than silently truncated (truncated code invalidates classification).
MAX_METHOD_CHARS = 48_000


class ClassifyError(RuntimeError):
    def __init__(self, method_id: str, reason: str, message: str = ""):
        detail = f" ({message})" if message else ""
        super().__init__(f"{reason}: {method_id}{detail}")
        self.method_id = method_id
        self.reason = reason


@dataclass
class Verdict:
    method_id: str
    algorithm: str
    raw_score: int
    answer_logprobs: Optional[dict[str, float]] = None
    cot_text: Optional[str] = None
    model: str = ""
    latency: float = 0.0
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "method_id": self.method_id,
            "algorithm": self.algorithm,
            "raw_score": self.raw_score,
            "answer_logprobs": self.answer_logprobs,
            "cot_text": self.cot_text,
            "model": self.model,
            "latency": self.latency,
            "flags": self.flags,
        }

    @classmethod
    def from_json(cls, row: dict) -> "Verdict":
        return cls(
            method_id=row["method_id"],
            algorithm=row["algorithm"],
            raw_score=row["raw_score"],
            answer_logprobs=row.get("answer_logprobs"),
            cot_text=row.get("cot_text"),
            model=row.get("model", ""),
            latency=row.get("latency", 0.0),
            flags=list(row.get("flags", [])),
        )


def _decode_single_token(
    response: BackendResponse, candidates: tuple[str, ...], method_id: str
) -> tuple[str, Optional[dict[str, float]]]:
    if response.top_logprobs is None:
        # Degraded path for backends without logprobs: first token of text.
        logger.warning("backend returned no logprobs; falling back to text parsing")
        text = response.text.strip()
        for cand in candidates:
            if text.startswith(cand):
                return cand, None
        raise ClassifyError(method_id, "undecodable", f"no candidate in text {text[:40]!r}")
    scored = {}
    for token, logprob in response.top_logprobs.items():
        norm = token.strip()
        for cand in candidates:
            if norm == cand or norm.lower() == cand.lower():
                if cand not in scored or logprob > scored[cand]:
                    scored[cand] = logprob
    if not scored:
        raise ClassifyError(method_id, "undecodable", "no candidate token in returned logprobs")
    best = max(sorted(scored), key=lambda c: scored[c])
    return best, scored


def parse_cot_score(text: str) -> Optional[int]:
    """Last standalone digit 0-4 in the generated text, or None."""
    matches = _LAST_DIGIT_RE.findall(text)
    return int(matches[-1]) if matches else None


def classify(
    style: PromptStyle,
    algorithm: str,
    method: MethodRecord,
    backend: Backend,
    retries: int = 2,
    backoff: float = 0.5,
    lenient: bool = False,
) -> Verdict:
    """Classify one method; raises ClassifyError / TransportError."""
    if len(method.source) > MAX_METHOD_CHARS:
        raise ClassifyError(method.method_id, "context_overflow",
                            f"method source of {len(method.source)} chars exceeds the context budget")
    messages = build_prompt(style, algorithm, method)
    attempt = 0
    while True:
        try:
            response = backend.complete(
                messages,
                style.decoding,
                logprobs=style.single_token,
                top_logprobs=10,
            )
            break
        except TransportError:
            if attempt >= retries:
                raise
            time.sleep(backoff * (2 ** attempt))
            attempt += 1

    algorithm_key = canonical_algorithm(algorithm)
    if style.variant == "cot":
        score = parse_cot_score(response.text)
        flags = []
        if score is None:
            if not lenient:
                raise ClassifyError(method.method_id, "unparsable",
                                    "chain-of-thought text has no standalone digit 0-4")
            score, flags = 0, ["unparsable"]
        return Verdict(
            method_id=method.method_id,
            algorithm=algorithm_key,
            raw_score=score,
            cot_text=response.text,
            model=response.model,
            latency=response.latency,
            flags=flags,
        )
    candidates = YES_NO_CANDIDATES if style.variant == "yes_no" else SCORE_CANDIDATES
    answer, logprobs = _decode_single_token(response, candidates, method.method_id)
    if style.variant == "yes_no":
        score = YES_SCORE if answer == "Yes" else NO_SCORE
    else:
        score = int(answer)
    return Verdict(
        method_id=method.method_id,
        algorithm=algorithm_key,
        raw_score=score,
        answer_logprobs=logprobs,
        model=response.model,
        latency=response.latency,
    )


@dataclass
class BatchErrorEntry:
    method_id: str
    reason: str
    message: str


@dataclass
class BatchResult:
    verdicts: list[Verdict]
    errors: list[BatchErrorEntry]

    def summary(self) -> dict:
        return {"verdicts": len(self.verdicts), "errors": len(self.errors)}


class VerdictCache:
    """Content-addressed on-disk verdict cache.

    Key: (backend id, style fingerprint, algorithm, method_id). Each prompt
    is billed once across reruns for deterministic backends.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.lock = threading.Lock()

    def _path(self, backend_id: str, style_fp: str, algorithm: str, method_id: str) -> Path:
        blob = "\n".join([backend_id, style_fp, algorithm, method_id])
        digest = hashlib.sha256(blob.encode("utf-8")).hexdigest()
        return self.root / digest[:2] / f"{digest}.json"

    def get(self, backend_id, style_fp, algorithm, method_id) -> Optional[Verdict]:
        path = self._path(backend_id, style_fp, algorithm, method_id)
        with self.lock:
            if not path.exists():
                return None
            try:
                return Verdict.from_json(json.loads(path.read_text(encoding="utf-8")))
            except (ValueError, KeyError):
                return None

    def put(self, backend_id, style_fp, algorithm, method_id, verdict: Verdict) -> None:
        path = self._path(backend_id, style_fp, algorithm, method_id)
        with self.lock:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(verdict.to_json(), ensure_ascii=False), encoding="utf-8")


def run_batch(
    style: PromptStyle,
    algorithm: str,
    records: list[MethodRecord],
    backend: Backend,
    parallelism: int = 1,
    cache: Optional[VerdictCache] = None,
    retries: int = 2,
    backoff: float = 0.5,
    lenient: bool = False,
) -> BatchResult:
    """Classify a record batch; output order follows input order regardless
    of completion order, and per-record failures do not abort the batch."""
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    style_fp = style.fingerprint()
    algorithm_key = canonical_algorithm(algorithm)
    slots: list[Optional[Verdict]] = [None] * len(records)
    errors: dict[int, BatchErrorEntry] = {}

    def work(idx: int) -> None:
        record = records[idx]
        if cache is not None:
            hit = cache.get(backend.backend_id, style_fp, algorithm_key, record.method_id)
            if hit is not None:
                slots[idx] = hit
                return
        try:
            verdict = classify(style, algorithm, record, backend,
                               retries=retries, backoff=backoff, lenient=lenient)
        except (ClassifyError, BackendError) as exc:
            reason = getattr(exc, "reason", "backend")
            errors[idx] = BatchErrorEntry(record.method_id, reason, str(exc))
            return
        slots[idx] = verdict
        if cache is not None:
            cache.put(backend.backend_id, style_fp, algorithm_key, record.method_id, verdict)

    if parallelism == 1:
        for idx in range(len(records)):
            work(idx)
    else:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            list(pool.map(work, range(len(records))))

    verdicts = [v for v in slots if v is not None]
    ordered_errors = [errors[i] for i in sorted(errors)]
    return BatchResult(verdicts=verdicts, errors=ordered_errors)
