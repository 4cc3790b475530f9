import threading

import pytest

from algodetect.backends import BackendResponse, MockBackend, TransportError, squash
from algodetect.classify import (
    ClassifyError,
    VerdictCache,
    classify,
    parse_cot_score,
    run_batch,
)
from algodetect.corpus import MethodRecord
from algodetect.prompts import DecodingParams, PromptStyle, make_style

BUBBLE_FIXTURE = MethodRecord(
    "bubble/fixture",
    "T.java",
    "bubbleSort",
    "void bubbleSort(int[] arr){for(int i=0;i<arr.length-1;i++){for(int j=0;j<arr.length-i-1;j++){"
    "if(arr[j]>arr[j+1]){int temp=arr[j];arr[j]=arr[j+1];arr[j+1]=temp;}}}}",
)
SPARSE_METHOD = MethodRecord("sparse", "T.java", "move", "void move(){ int temp = 0; int i = temp; }")
EMPTY_METHOD = MethodRecord("empty", "T.java", "nop", "void nop() { }")


class StaticBackend:
    """Canned single response, for decode-path tests."""

    backend_id = "static"

    def __init__(self, response):
        self.response = response

    def complete(self, messages, decoding, logprobs=False, top_logprobs=10):
        return self.response


class FlakyBackend:
    """Wraps the mock backend; fails requests whose prompt mentions a marked id."""

    backend_id = "flaky"

    def __init__(self, fail_markers):
        self.inner = MockBackend()
        self.fail_markers = set(fail_markers)
        self.calls = 0

    def complete(self, messages, decoding, logprobs=False, top_logprobs=10):
        self.calls += 1
        content = messages[-1]["content"]
        if any(marker in content for marker in self.fail_markers):
            raise TransportError("injected failure")
        return self.inner.complete(messages, decoding, logprobs, top_logprobs)


def test_mock_scores_follow_declared_heuristic():
    mock = MockBackend()
    assert mock.heuristic_score(BUBBLE_FIXTURE.source, "bubble sort") == 4
    assert mock.heuristic_score(SPARSE_METHOD.source, "bubble sort") == 2
    assert mock.heuristic_score(EMPTY_METHOD.source, "bubble sort") == 0


def test_classify_fixture_scores_four():
    verdict = classify(make_style("score"), "bubble sort", BUBBLE_FIXTURE, MockBackend())
    assert verdict.raw_score == 4
    assert verdict.algorithm == "bubble_sort"
    assert verdict.answer_logprobs is not None


def test_argmax_over_candidate_tokens_only():
    response = BackendResponse(
        text="4", top_logprobs={"4": -0.1, "0": -2.3, "Yes": -9.0}, model="static", latency=0.0
    )
    verdict = classify(make_style("score"), "gcd", EMPTY_METHOD, StaticBackend(response))
    assert verdict.raw_score == 4
    assert verdict.answer_logprobs == {"4": -0.1, "0": -2.3}


def test_yes_no_mapping():
    yes = BackendResponse("Yes", {"Yes": -0.2, "No": -3.0}, "static", 0.0)
    no = BackendResponse("No", {"Yes": -5.0, "No": -0.1}, "static", 0.0)
    style = make_style("yesno")
    assert classify(style, "gcd", EMPTY_METHOD, StaticBackend(yes)).raw_score == 4
    assert classify(style, "gcd", EMPTY_METHOD, StaticBackend(no)).raw_score == 0


def test_undecodable_when_no_candidate_token():
    response = BackendResponse("?", {"maybe": -0.5, "banana": -1.0}, "static", 0.0)
    with pytest.raises(ClassifyError, match="undecodable"):
        classify(make_style("score"), "gcd", EMPTY_METHOD, StaticBackend(response))


def test_cot_last_standalone_digit():
    assert parse_cot_score("…the midpoint halves the range. Therefore: 3") == 3
    assert parse_cot_score("Score the snippet from 0 to 4. I answer 2") == 2
    assert parse_cot_score("uses 10 elements and 42 steps") is None  # no standalone 0-4
    assert parse_cot_score("value 3.5 is not a score, final answer: 1") == 1
    assert parse_cot_score("nothing numeric here") is None


def test_cot_unparsable_strict_and_lenient():
    response = BackendResponse("no digits at all", None, "static", 0.0)
    style = make_style("cot")
    with pytest.raises(ClassifyError, match="unparsable"):
        classify(style, "gcd", EMPTY_METHOD, StaticBackend(response))
    verdict = classify(style, "gcd", EMPTY_METHOD, StaticBackend(response), lenient=True)
    assert verdict.raw_score == 0
    assert "unparsable" in verdict.flags


def test_cot_mock_round_trip():
    verdict = classify(make_style("cot"), "bubble sort", BUBBLE_FIXTURE, MockBackend())
    assert verdict.raw_score == 4
    assert verdict.cot_text.endswith("4")


def test_sampling_params_do_not_affect_single_token_verdicts():
    mock = MockBackend()
    scores = []
    for params in (
        DecodingParams(),
        DecodingParams(temperature=0.9, top_k=50, top_p=0.9, max_tokens=5),
        DecodingParams(temperature=0.1, top_k=5, top_p=0.5, max_tokens=1),
    ):
        style = PromptStyle("score", decoding=params)
        for method in (BUBBLE_FIXTURE, SPARSE_METHOD, EMPTY_METHOD):
            scores.append(classify(style, "bubble sort", method, mock).raw_score)
    assert scores[0:3] == scores[3:6] == scores[6:9]


def test_context_overflow_is_a_hard_error():
    huge = MethodRecord("huge", "T.java", "f", "int x = 1; " * 10_000)
    with pytest.raises(ClassifyError, match="context"):
        classify(make_style("score"), "gcd", huge, MockBackend())


def test_run_batch_preserves_input_order():
    records = [BUBBLE_FIXTURE, SPARSE_METHOD, EMPTY_METHOD]
    batch = run_batch(make_style("score"), "bubble sort", records, MockBackend())
    assert [v.method_id for v in batch.verdicts] == ["bubble/fixture", "sparse", "empty"]
    assert [v.raw_score for v in batch.verdicts] == [4, 2, 0]


def test_parallel_batch_matches_serial():
    records = [BUBBLE_FIXTURE, SPARSE_METHOD, EMPTY_METHOD] * 10
    for i, rec in enumerate(records):
        records[i] = MethodRecord(f"{rec.method_id}#{i}", rec.file_path, rec.name, rec.source)
    serial = run_batch(make_style("score"), "bubble sort", records, MockBackend(), parallelism=1)
    parallel = run_batch(make_style("score"), "bubble sort", records, MockBackend(), parallelism=8)
    assert [v.to_json() for v in serial.verdicts] == [v.to_json() for v in parallel.verdicts]


def test_cache_makes_rerun_free(tmp_path):
    cache = VerdictCache(tmp_path / "cache")
    records = [BUBBLE_FIXTURE, SPARSE_METHOD, EMPTY_METHOD]
    backend = MockBackend()
    first = run_batch(make_style("score"), "bubble sort", records, backend, cache=cache)
    assert backend.calls == 3
    second = run_batch(make_style("score"), "bubble sort", records, backend, cache=cache)
    assert backend.calls == 3  # all hits, zero new backend calls
    assert [v.to_json() for v in first.verdicts] == [v.to_json() for v in second.verdicts]


def test_cache_key_separates_styles_and_algorithms(tmp_path):
    cache = VerdictCache(tmp_path / "cache")
    backend = MockBackend()
    run_batch(make_style("score"), "bubble sort", [SPARSE_METHOD], backend, cache=cache)
    run_batch(make_style("yesno"), "bubble sort", [SPARSE_METHOD], backend, cache=cache)
    run_batch(make_style("score"), "gcd", [SPARSE_METHOD], backend, cache=cache)
    assert backend.calls == 3


def test_fault_injection_keeps_batch_running():
    records = []
    for i in range(100):
        records.append(
            MethodRecord(f"m{i}", "T.java", "f", f"void f() {{ int marker_{i} = {i % 4}; }}")
        )
    fail_markers = {"marker_3 ", "marker_57 ", "marker_91 "}
    backend = FlakyBackend(fail_markers)
    batch = run_batch(
        make_style("score"), "gcd", records, backend, retries=2, backoff=0.0
    )
    assert len(batch.verdicts) == 97
    assert len(batch.errors) == 3
    assert {e.method_id for e in batch.errors} == {"m3", "m57", "m91"}
    # failures were retried before giving up: 97 + 3*3 calls
    assert backend.calls == 97 + 9


def test_transport_error_retries_then_succeeds():
    class RecoveringBackend:
        backend_id = "recovering"

        def __init__(self):
            self.calls = 0
            self.inner = MockBackend()

        def complete(self, messages, decoding, logprobs=False, top_logprobs=10):
            self.calls += 1
            if self.calls < 3:
                raise TransportError("hiccup")
            return self.inner.complete(messages, decoding, logprobs, top_logprobs)

    backend = RecoveringBackend()
    verdict = classify(make_style("score"), "gcd", EMPTY_METHOD, backend, retries=3, backoff=0.0)
    assert verdict.raw_score == 0
    assert backend.calls == 3


def test_squash_is_whitespace_insensitive():
    assert squash("int mid = (low + high) / 2;") == "intmid=(low+high)/2;"
    assert squash("int mid=(low+high)/2;") == "intmid=(low+high)/2;"


def test_cache_is_thread_safe(tmp_path):
    cache = VerdictCache(tmp_path / "cache")
    records = [
        MethodRecord(f"t{i}", "T.java", "f", f"void f() {{ int v{i} = 0; }}") for i in range(40)
    ]
    errors = []

    def hammer():
        try:
            run_batch(make_style("score"), "gcd", records, MockBackend(), parallelism=4, cache=cache)
        except Exception as exc:  # pragma: no cover - failure reporting
            errors.append(exc)

    threads = [threading.Thread(target=hammer) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
