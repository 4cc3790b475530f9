import pytest

from algodetect.lexer import JAVA_KEYWORDS, LexError, tokenize


def kinds_and_texts(source):
    return [(t.kind, t.text) for t in tokenize(source) if t.kind != "whitespace"]


def test_declaration_tokens():
    assert kinds_and_texts("int i = 0;") == [
        ("keyword", "int"),
        ("identifier", "i"),
        ("operator", "="),
        ("literal-number", "0"),
        ("punctuation", ";"),
    ]


def test_comment_is_atomic():
    tokens = tokenize("// sort\nx++;")
    assert tokens[0].kind == "comment"
    assert tokens[0].text == "// sort"
    identifiers = [t.text for t in tokens if t.kind == "identifier"]
    assert identifiers == ["x"]


def test_string_contents_not_identifiers():
    tokens = tokenize('String s = "bubble sort temp";')
    identifiers = [t.text for t in tokens if t.kind == "identifier"]
    assert identifiers == ["String", "s"]
    strings = [t.text for t in tokens if t.kind == "literal-string"]
    assert strings == ['"bubble sort temp"']


def test_keywords_are_exactly_reserved_words():
    tokens = tokenize("if (x instanceof Foo) return true;")
    keyword_texts = {t.text for t in tokens if t.kind == "keyword"}
    assert keyword_texts == {"if", "instanceof", "return", "true"}
    assert all(t.text in JAVA_KEYWORDS for t in tokens if t.kind == "keyword")
    assert all(t.text not in JAVA_KEYWORDS for t in tokens if t.kind == "identifier")


@pytest.mark.parametrize(
    "source",
    [
        "char c = 'a'; char nl = '\\n';",
        "long big = 0x1F_FFL; double d = 1.5e-3; int b = 0b1010;",
        "a >>>= 2; b <<= 1; c = a >>> 3;",
        "String block = \"\"\"\n multi \"line\" \n\"\"\";",
        "void f(int... args) { }",
        "Runnable r = () -> { x++; };",
    ],
)
def test_round_trip_snippets(source):
    assert "".join(t.text for t in tokenize(source)) == source


def test_round_trip_mini_corpus(mini_corpus):
    sample = mini_corpus[:50]
    assert len(sample) == 50
    for record in sample:
        assert "".join(t.text for t in record.tokens) == record.source


def test_byte_offsets_monotone_and_utf8():
    source = "int x = 1; // コメント\nx = 2;"
    tokens = tokenize(source)
    offset = 0
    for tok in tokens:
        assert tok.offset == offset
        offset += len(tok.text.encode("utf-8"))
    assert offset == len(source.encode("utf-8"))


def test_unterminated_string_is_lenient():
    warnings = []
    tokens = tokenize('x = "unclosed', warnings)
    assert tokens[-1].kind == "literal-string"
    assert tokens[-1].text == '"unclosed'
    assert any("unterminated" in w for w in warnings)


def test_unterminated_comment_is_lenient():
    warnings = []
    tokens = tokenize("a = 1; /* trailing", warnings)
    assert tokens[-1].kind == "comment"
    assert any("unterminated" in w for w in warnings)


def test_malformed_encoding_rejected():
    with pytest.raises(LexError):
        tokenize(b"\xff\xfe broken")
