import pytest

from stegotax.codes import (
    MalformedCode,
    NotAnEmbeddingCode,
    PatternCode,
    PatternKind,
    derive_representation,
    format_code,
    is_strict_prefix,
    matches_prefix,
    parse_code,
)

E = PatternKind.EMBEDDING
R = PatternKind.REPRESENTATION


@pytest.mark.parametrize("text,kind,path,media", [
    ("E1.3n1.", E, (1, 3), ("n", 1)),
    ("E1", E, (1,), None),
    ("R1.1n", R, (1, 1), ("n", 1)),  # missing variant index means index 1
    ("E2.1t1.", E, (2, 1), ("t", 1)),
    ("e1.1N1.", E, (1, 1), ("n", 1)),  # case-insensitive
    ("R2.2n1", R, (2, 2), ("n", 1)),
    ("E1.3c2", E, (1, 3), ("c", 2)),
    ("  E1.3d1. ", E, (1, 3), ("d", 1)),
])
def test_parse_code(text, kind, path, media):
    code = parse_code(text)
    assert code.kind is kind
    assert code.path == path
    assert code.media == media


@pytest.mark.parametrize("code,expected", [
    (PatternCode(E, (2, 1), ("t", 1)), "E2.1t1."),
    (PatternCode(E, (1,)), "E1."),
    (PatternCode(R, (2, 2), ("n", 1)), "R2.2n1."),
    (PatternCode(R, (1, 1), ("n", 3)), "R1.1n3."),
])
def test_format_code(code, expected):
    assert format_code(code) == expected


@pytest.mark.parametrize("bad", ["", "X1", "E", "E0", "E1.0", "1.3", "E1..3", "E1.n1",
                                 "E1n0", "E1.3nn1", "pattern", "E-1", "E1,3"])
def test_parse_code_rejects(bad):
    with pytest.raises(MalformedCode):
        parse_code(bad)


def test_default_index_equivalence():
    assert parse_code("R1.1n") == parse_code("R1.1n1")


def test_roundtrip_is_canonical():
    for text in ("e1.3N1", "E1.3n1.", "R1.1n"):
        code = parse_code(text)
        assert parse_code(format_code(code)) == code


def test_derive_representation():
    assert format_code(derive_representation(parse_code("E1n1."))) == "R1n1."
    assert format_code(derive_representation(parse_code("E1"))) == "R1."
    derived = derive_representation(parse_code("E1.1n1"))
    assert derived == parse_code("R1.1n")  # preserve-suffix rule with default index


def test_derive_representation_rejects_representation_codes():
    with pytest.raises(NotAnEmbeddingCode):
        derive_representation(parse_code("R1.1"))


def test_constructor_enforces_invariants():
    with pytest.raises(MalformedCode):
        PatternCode(E, ())
    with pytest.raises(MalformedCode):
        PatternCode(E, (1, 0))
    with pytest.raises(MalformedCode):
        PatternCode(E, (1,), ("nn", 1))
    with pytest.raises(MalformedCode):
        PatternCode(E, (1,), ("n", 0))


@pytest.mark.parametrize("prefix,code,expected", [
    ("E1", "E1.3", True),
    ("E1", "E1.3n1", True),
    ("E1", "E1n1", True),       # same path, media only on the child
    ("E1.3", "E1.3n1", True),
    ("E1.3", "E1.3", False),    # strict: not a prefix of itself
    ("E1n1", "E1.3n1", False),  # media-carrying codes are leaves
    ("E1", "E2.1", False),
    ("E1", "R1.3", False),      # kind must match
    ("E1.3", "E1.31", False),   # path elements, not text prefixes
])
def test_is_strict_prefix(prefix, code, expected):
    assert is_strict_prefix(parse_code(prefix), parse_code(code)) is expected


def test_matches_prefix_includes_equality():
    assert matches_prefix(parse_code("E1.3n1"), parse_code("E1.3n1."))
    assert matches_prefix(parse_code("E1.3"), parse_code("E1.3n1."))
    assert not matches_prefix(parse_code("E1.3n1"), parse_code("E1.3"))
