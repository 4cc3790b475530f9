"""Chat-completion backends: a deterministic mock plus an HTTP client.

Every backend answers a message sequence with text and, when available,
top log-probabilities for the first generated token. The mock backend is
the test double for the whole pipeline: it derives a 0-4 score from a
declared heuristic (positive fixture substring => 4, otherwise the number
of distinct recall-focused keyword hits clamped to 3) and emits synthetic
logprobs with the argmax at that score.
"""

from __future__ import annotations

import os
import re
import time
from dataclasses import dataclass
from typing import Optional, Protocol

import requests

from .keywords import KeywordPattern
from .prompts import DecodingParams, canonical_algorithm


class BackendError(RuntimeError):
    """Permanent backend failure (bad request, undecodable payload)."""


class TransportError(BackendError):
    """Transient transport failure; retried with backoff."""


@dataclass
class BackendResponse:
    text: str
    top_logprobs: Optional[dict[str, float]]  # first generated token
    model: str
    latency: float


class Backend(Protocol):
    backend_id: str

    def complete(
        self,
        messages: list[dict],
        decoding: DecodingParams,
        logprobs: bool = False,
        top_logprobs: int = 10,
    ) -> BackendResponse: ...


# Whitespace-stripped source fragments that identify a reference positive.
MOCK_POSITIVE_FIXTURES: dict[str, tuple[str, ...]] = {
    "bubble_sort": ("temp=arr[j];arr[j]=arr[j+1];arr[j+1]=temp;",),
    "binary_search": ("mid=(low+high)/2", "mid=low+(high-low)/2"),
    "gcd": ("(b,a%b)", "while(b!=0){intt=b;b=a%b;a=t;}"),
    "fibonacci": ("fib(n-1)+fib(n-2)", "c=a+b;a=b;b=c;"),
    "palindrome": ("charAt(left)!=s.charAt(right)", "s.charAt(i)!=s.charAt(n-1-i)"),
    "prime_factors": ("while(n%d==0)", "factors.add(d);n/=d;"),
    "transpose_matrix": ("result[j][i]=m[i][j];", "t[j][i]=a[i][j];", "m[i][j]=m[j][i];"),
}

_WS_RE = re.compile(r"\s+")


def squash(text: str) -> str:
    return _WS_RE.sub("", text)


def _parse_query(messages: list[dict]) -> tuple[str, str, str]:
    """Recover (style, method source, algorithm) from the final user turn."""
    content = ""
    for message in reversed(messages):
        if message.get("role") == "user":
            content = message.get("content", "")
            break
    marker_yes_no = " Does the snippet implement "
    marker_score = " Does the code snippet implement the algorithm "
    if marker_yes_no in content:
        method, _, rest = content.partition(marker_yes_no)
        algorithm = rest.split(", only answer")[0]
        return "yes_no", method[len("SNIPPET: "):], algorithm
    if marker_score in content:
        method, _, rest = content.partition(marker_score)
        algorithm = rest.split("?\n")[0]
        style = "cot" if "step-by-step" in rest else "score"
        return style, method[len("SNIPPET: "):], algorithm
    return "score", content, ""


class MockBackend:
    """Deterministic stand-in for a hosted model."""

    backend_id = "mock"

    def __init__(self, keyword_patterns: Optional[dict[str, KeywordPattern]] = None):
        if keyword_patterns is None:
            from .resources import bundled_keyword_patterns

            keyword_patterns = bundled_keyword_patterns("recall_focused")
        self.keyword_patterns = keyword_patterns
        self.calls = 0

    def heuristic_score(self, method_source: str, algorithm: str) -> int:
        key = canonical_algorithm(algorithm)
        squashed = squash(method_source)
        for fixture in MOCK_POSITIVE_FIXTURES.get(key, ()):
            if fixture in squashed:
                return 4
        pattern = self.keyword_patterns.get(key)
        if pattern is None:
            return 0
        hits = sum(group.hit_count(method_source) for group in pattern.groups)
        return max(0, min(3, hits))

    def complete(self, messages, decoding, logprobs=False, top_logprobs=10):
        self.calls += 1
        style, method, algorithm = _parse_query(messages)
        score = self.heuristic_score(method, algorithm)
        if style == "cot":
            text = (
                "Compared the snippet's control flow and data handling against "
                f"the expected shape of {algorithm} step by step. Final score: {score}"
            )
            return BackendResponse(text=text, top_logprobs=None, model="mock", latency=0.0)
        lp: dict[str, float] = {}
        for digit in range(5):
            lp[str(digit)] = -0.05 if digit == score else -3.0 - abs(digit - score)
        if score >= 3:
            lp["Yes"], lp["No"] = -0.4, -6.0
        else:
            lp["Yes"], lp["No"] = -6.0, -0.4
        answer = ("Yes" if score >= 3 else "No") if style == "yes_no" else str(score)
        return BackendResponse(
            text=answer,
            top_logprobs=lp if logprobs else None,
            model="mock",
            latency=0.0,
        )


class HttpBackend:
    """OpenAI-style chat-completion client configured from the environment:

    ALGODETECT_API_BASE, ALGODETECT_API_KEY, ALGODETECT_MODEL,
    ALGODETECT_TIMEOUT (seconds), ALGODETECT_SEND_TOP_K=1 to forward top_k.
    """

    def __init__(
        self,
        base_url: Optional[str] = None,
        api_key: Optional[str] = None,
        model: Optional[str] = None,
        timeout: Optional[float] = None,
        send_top_k: Optional[bool] = None,
    ):
        self.base_url = (base_url or os.environ.get("ALGODETECT_API_BASE", "")).rstrip("/")
        self.api_key = api_key or os.environ.get("ALGODETECT_API_KEY", "")
        self.model = model or os.environ.get("ALGODETECT_MODEL", "")
        self.timeout = timeout if timeout is not None else float(os.environ.get("ALGODETECT_TIMEOUT", "120"))
        if send_top_k is None:
            send_top_k = os.environ.get("ALGODETECT_SEND_TOP_K", "") == "1"
        self.send_top_k = send_top_k
        if not self.base_url or not self.model:
            raise BackendError(
                "http backend needs ALGODETECT_API_BASE and ALGODETECT_MODEL set"
            )

    @property
    def backend_id(self) -> str:
        return self.model

    def complete(self, messages, decoding, logprobs=False, top_logprobs=10):
        payload = {
            "model": self.model,
            "messages": messages,
            "temperature": decoding.temperature,
            "top_p": decoding.top_p,
            "max_tokens": decoding.max_tokens,
        }
        if self.send_top_k and decoding.top_k:
            payload["top_k"] = decoding.top_k
        if logprobs:
            payload["logprobs"] = True
            payload["top_logprobs"] = max(10, top_logprobs)
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        started = time.perf_counter()
        try:
            response = requests.post(
                f"{self.base_url}/chat/completions",
                json=payload,
                headers=headers,
                timeout=self.timeout,
            )
        except requests.RequestException as exc:
            raise TransportError(f"request failed: {exc}") from exc
        latency = time.perf_counter() - started
        if response.status_code == 429 or response.status_code >= 500:
            raise TransportError(f"HTTP {response.status_code}: {response.text[:200]}")
        if response.status_code != 200:
            raise BackendError(f"HTTP {response.status_code}: {response.text[:200]}")
        try:
            body = response.json()
            choice = body["choices"][0]
            text = choice["message"]["content"] or ""
        except (ValueError, KeyError, IndexError) as exc:
            raise BackendError(f"malformed completion response: {exc}") from exc
        top: Optional[dict[str, float]] = None
        lp = choice.get("logprobs")
        if lp and lp.get("content"):
            first = lp["content"][0]
            top = {entry["token"]: entry["logprob"] for entry in first.get("top_logprobs", [])}
            token = first.get("token")
            if token is not None and token not in top:
                top[token] = first.get("logprob", 0.0)
        return BackendResponse(
            text=text,
            top_logprobs=top,
            model=body.get("model", self.model),
            latency=latency,
        )


def get_backend(name: str) -> Backend:
    if name == "mock":
        return MockBackend()
    if name == "http":
        return HttpBackend()
    raise BackendError(f"unknown backend {name!r} (expected 'mock' or 'http')")
