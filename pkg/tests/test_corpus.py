import json

import pytest

from algodetect.corpus import (
    CorpusError,
    MethodRecord,
    extract_methods,
    load_corpus,
    save_corpus,
)

TWO_METHODS = """
public class Pair {
    public int first() { return 1; }

    public int second() { return 2; }
}
"""

INTERFACE_ONLY = """
public interface Shape {
    double area();
    double perimeter();
}
"""

ANONYMOUS_INNER = """
public class Runner {
    public void launch() {
        Thread t = new Thread(new Runnable() {
            public void run() {
                System.out.println("hi");
            }
        });
        t.start();
    }
}
"""

UNBALANCED = """
public class Broken {
    public void fine() { int x = 1; }
    public void broken() { if (x) {
"""


def test_two_methods_two_records():
    report = extract_methods(TWO_METHODS, "Pair.java")
    names = [r.name for r in report.records]
    assert names == ["first", "second"]
    assert len({r.method_id for r in report.records}) == 2


def test_interface_without_bodies_yields_nothing():
    report = extract_methods(INTERFACE_ONLY, "Shape.java")
    assert report.records == []


def test_anonymous_inner_method_stays_in_enclosing_record():
    report = extract_methods(ANONYMOUS_INNER, "Runner.java")
    assert [r.name for r in report.records] == ["launch"]
    assert "run()" in report.records[0].source.replace(" ", "")


def test_unbalanced_braces_reported():
    report = extract_methods(UNBALANCED, "Broken.java")
    assert [r.name for r in report.records] == ["fine"]
    assert report.skipped_regions == 1


def test_constructor_and_nested_class_methods_extracted():
    source = """
    class Outer {
        Outer(int x) { this.x = x; }
        static class Inner {
            int twice(int v) { return v * 2; }
        }
        private int x;
    }
    """
    report = extract_methods(source, "Outer.java")
    assert [r.name for r in report.records] == ["Outer", "twice"]


def test_initializer_blocks_skipped():
    source = """
    class WithInit {
        static { SETUP = true; }
        { counter = 0; }
        int value() { return counter; }
        static boolean SETUP;
        int counter;
    }
    """
    report = extract_methods(source, "WithInit.java")
    assert [r.name for r in report.records] == ["value"]


def test_method_source_includes_signature_and_body():
    report = extract_methods(TWO_METHODS, "Pair.java")
    assert report.records[0].source == "public int first() { return 1; }"
    assert report.records[0].method_id == "Pair.java:3:first"


def test_jsonl_round_trip(tmp_path):
    record = MethodRecord("m1", "A.java", "f", "void f() {}", meta={"obfuscated": True})
    path = tmp_path / "corpus.jsonl"
    save_corpus([record], path)
    loaded = load_corpus(path)
    assert len(loaded) == 1
    assert loaded[0].method_id == "m1"
    assert loaded[0].source == "void f() {}"
    assert loaded[0].meta["obfuscated"] is True


def test_duplicate_method_id_rejected(tmp_path):
    path = tmp_path / "dup.jsonl"
    row = {"method_id": "m1", "file_path": "A.java", "name": "f", "source": "void f() {}"}
    path.write_text(json.dumps(row) + "\n" + json.dumps(row) + "\n", encoding="utf-8")
    with pytest.raises(CorpusError, match="duplicate"):
        load_corpus(path)


def test_missing_corpus_path_rejected(tmp_path):
    with pytest.raises(CorpusError, match="does not exist"):
        load_corpus(tmp_path / "nope.jsonl")


def test_ast_element_count_stable_under_reserialization(tmp_path, mini_corpus):
    sample = mini_corpus[:20]
    counts = [r.ast_element_count for r in sample]
    path = tmp_path / "again.jsonl"
    save_corpus(sample, path)
    reloaded = load_corpus(path)
    assert [r.ast_element_count for r in reloaded] == counts


def test_mini_corpus_is_large_enough(mini_corpus, mini_truth):
    assert len(mini_corpus) >= 140
    for algorithm in mini_truth.algorithms:
        positives, negatives = mini_truth.counts(algorithm)
        assert positives >= 10
        assert negatives >= 10
