import json
from importlib import resources

import pytest

from stegotax.codes import format_code, parse_code
from stegotax.taxonomy import (
    DanglingParent,
    DuplicateCode,
    InvalidParent,
    PatternNotFound,
    TaxonomyParseError,
    children,
    load_taxonomy,
    lookup,
)

REQUIRED_CODES = [
    "E1.", "E1.1.", "E1.2.", "E1.3.", "E1.4.", "E1.5.", "E2.", "E2.1.", "E2.2.",
    "R1.", "R1.1.", "R1.2.", "R1.3.", "R1.4.", "R1.5.", "R2.", "R2.1.", "R2.2.",
    "E1n1.", "E1.1n1.", "E1.2f1.", "E1.3n1.", "E1.3t1.", "E1.3d1.", "E1.3c1.",
    "E1.3f1.", "E1.1f1.", "E2.1t1.", "R1n1.", "R1.1n1.", "R2.2n1.",
]


def seed_json() -> dict:
    content = resources.files("stegotax").joinpath("data/seed_taxonomy.json").read_text("utf-8")
    return json.loads(content)


def test_seed_contains_required_codes(taxonomy):
    for text in REQUIRED_CODES:
        assert parse_code(text) in taxonomy, text
    assert len(taxonomy) >= 26


def test_seed_matches_file_enumeration(taxonomy):
    raw_codes = sorted(entry["code"] for entry in seed_json()["patterns"])
    loaded_codes = sorted(record.code_text for record in taxonomy.records())
    assert loaded_codes == raw_codes
    assert taxonomy.version == seed_json()["version"]


def test_lookup_known_records(taxonomy):
    assert lookup(taxonomy, parse_code("E1.3")).name == "LSB State/Value Mod."
    assert lookup(taxonomy, parse_code("E2.2")).name == "Element Positioning"
    assert "location of an element" in lookup(taxonomy, parse_code("E2.2")).description
    assert lookup(taxonomy, parse_code("E1.3n1.")).name == "Network LSB State/Value Modulation"


def test_lookup_missing_code(taxonomy):
    with pytest.raises(PatternNotFound):
        lookup(taxonomy, parse_code("E9"))


def test_children_of_e1(taxonomy):
    codes = [record.code_text for record in children(taxonomy, parse_code("E1"))]
    for text in ("E1.1.", "E1.2.", "E1.3.", "E1.4.", "E1.5.", "E1n1.", "E1.1n1.", "E1.3c1."):
        assert text in codes
    assert "E2.1." not in codes
    assert "R1.1." not in codes
    assert codes == sorted(codes)


def test_children_of_e22_enumerated_from_file(taxonomy):
    # independent oracle: textual scan of the raw seed file
    expected = sorted(
        entry["code"] for entry in seed_json()["patterns"]
        if entry["code"].startswith("E2.2") and entry["code"] != "E2.2."
    )
    got = [record.code_text for record in children(taxonomy, parse_code("E2.2"))]
    assert got == expected
    assert got == ["E2.2n1."]


def test_leaf_has_no_children(taxonomy):
    assert children(taxonomy, parse_code("E1.3n1")) == []


def test_parents_resolve_and_are_prefixes(taxonomy):
    for record in taxonomy.records():
        if record.parent is None:
            continue
        parent = lookup(taxonomy, record.parent)
        assert format_code(parent.code) != record.code_text


def test_load_rejects_empty_file():
    with pytest.raises(TaxonomyParseError):
        load_taxonomy("")


def test_load_rejects_non_object():
    with pytest.raises(TaxonomyParseError):
        load_taxonomy("[1, 2]")


def _file(patterns) -> str:
    return json.dumps({"version": "test", "patterns": patterns})


def test_load_rejects_dangling_parent():
    with pytest.raises(DanglingParent):
        load_taxonomy(_file([
            {"code": "E1.3.", "name": "X", "description": "", "parent": "E7.", "domain": "generic"},
        ]))


def test_load_rejects_duplicate_code():
    with pytest.raises(DuplicateCode):
        load_taxonomy(_file([
            {"code": "E1.", "name": "A", "description": "", "parent": None, "domain": "generic"},
            {"code": "e1", "name": "B", "description": "", "parent": None, "domain": "generic"},
        ]))


def test_load_rejects_non_prefix_parent():
    with pytest.raises(InvalidParent):
        load_taxonomy(_file([
            {"code": "E2.", "name": "A", "description": "", "parent": None, "domain": "generic"},
            {"code": "E1.3.", "name": "B", "description": "", "parent": "E2.", "domain": "generic"},
        ]))


def test_load_rejects_missing_fields():
    with pytest.raises(TaxonomyParseError):
        load_taxonomy(_file([{"code": "E1."}]))
    with pytest.raises(TaxonomyParseError):
        load_taxonomy(json.dumps({"patterns": []}))
