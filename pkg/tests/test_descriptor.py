import pytest

from corpus import CANONICAL_FIXTURES, COMPOSITE_DESCRIPTORS, PARSE_SUITE, TABLE_DESCRIPTORS
from stegotax.codes import parse_code
from stegotax.descriptor import (
    Descriptor,
    DescriptorError,
    Directness,
    Locality,
    PatternClause,
    StarProperty,
    ValidationFailed,
    analyze,
    diff,
    explain,
    normalize,
    parse_descriptor,
    render_canonical,
    validate,
)
from stegotax.diagnostics import (
    LABEL_ERROR,
    MALFORMED_CODE,
    MISSING_INDIRECT_PATTERN,
    MULTI_LEVEL_ARITY,
    NAME_CODE_MISMATCH,
    REPRESENTATION_IN_EMBEDDING_SLOT,
    STRAY_TRAILING_PAREN,
    SYNTAX_ERROR,
    UNKNOWN_PATTERN_CODE,
    errors_only,
)
from stegotax.vocab import (
    Activeness,
    DirectnessKind,
    DistributionPattern,
    IndirectPattern,
    LevelCharacteristic,
    LocalityKind,
    ReferenceTemporality,
    StarPropertyKind,
)


def clause(taxonomy, code_text, label=None) -> PatternClause:
    code = parse_code(code_text)
    return PatternClause(code=code, name=taxonomy.get(code).name, label=label)


# -- corpus ------------------------------------------------------------------


@pytest.mark.parametrize("text", PARSE_SUITE)
def test_corpus_parses_without_errors(text, taxonomy):
    result = analyze(text, taxonomy)
    assert result.descriptor is not None
    assert errors_only(result.diagnostics) == []


@pytest.mark.parametrize("scenario,text,expected", CANONICAL_FIXTURES)
def test_canonicalization_fixtures(scenario, text, expected, taxonomy):
    assert normalize(text, taxonomy) == expected


@pytest.mark.parametrize("text", PARSE_SUITE)
def test_normalize_idempotent_on_corpus(text, taxonomy):
    once = normalize(text, taxonomy)
    assert normalize(once, taxonomy) == once


def test_simple_descriptor_has_all_defaults(taxonomy):
    d = parse_descriptor(TABLE_DESCRIPTORS["reserved_bit"], taxonomy)
    assert d.locality == Locality()
    assert d.directness == Directness()
    assert d.activeness is Activeness.ACTIVE
    assert d.level is LevelCharacteristic.SINGLE_LEVEL
    assert d.temporality is ReferenceTemporality.PRESENT
    assert d.star_properties == ()
    assert [str(c.code) for c in d.patterns] == ["E1.1n1."]
    assert d.patterns[0].label is None


def test_scattered_dead_drop_composite(taxonomy):
    d = parse_descriptor(COMPOSITE_DESCRIPTORS["scattered_dead_drop"], taxonomy)
    assert d.locality == Locality(LocalityKind.DISTRIBUTED, DistributionPattern.HOST_BASED_SCATTERING)
    assert d.directness == Directness(DirectnessKind.INDIRECT, IndirectPattern.DEAD_DROP)
    assert d.activeness is Activeness.ACTIVE
    assert d.level is LevelCharacteristic.SINGLE_LEVEL
    assert [str(c.code) for c in d.patterns] == ["E1.3n1."]


def test_multi_level_composite_clauses(taxonomy):
    d = parse_descriptor(COMPOSITE_DESCRIPTORS["network_into_image_layers"], taxonomy)
    assert d.level is LevelCharacteristic.MULTI_LEVEL
    assert [(c.label, str(c.code)) for c in d.patterns] == [("a", "E1.1n1."), ("b", "E1.3d1.")]
    assert d.patterns[0].name == "Network Reserved/Unused State/Value Modulation"


def test_three_layer_composite_keeps_order(taxonomy):
    d = parse_descriptor(COMPOSITE_DESCRIPTORS["filesystem_three_layers"], taxonomy)
    assert [(c.label, str(c.code)) for c in d.patterns] == [
        ("a", "E1.3f1."), ("b", "E1.1f1."), ("c", "E1.2f1.")
    ]
    result = analyze(COMPOSITE_DESCRIPTORS["filesystem_three_layers"], taxonomy)
    assert [d.code for d in result.diagnostics] == [STRAY_TRAILING_PAREN]


def test_proxy_descriptor(taxonomy):
    d = parse_descriptor(TABLE_DESCRIPTORS["vm_migration_embedding"], taxonomy)
    assert d.directness == Directness(DirectnessKind.INDIRECT, IndirectPattern.PROXY)
    assert [str(c.code) for c in d.patterns] == ["E1n1."]


def test_minimal_descriptor_fills_name(taxonomy):
    d = parse_descriptor("E1.", taxonomy)
    assert d.patterns[0].name == "State/Value Modulation"
    assert render_canonical(d, taxonomy) == "E1. State/Value Modulation"


# -- attribute forms and aliases ----------------------------------------------


@pytest.mark.parametrize("text,expected", [
    ("(Semi-active) E2.1t1. Text Element Enumeration",
     "Semi-active E2.1t1. Text Element Enumeration"),
    ("(History-focused) E1.3d1. Digital Media LSB State/Value Modulation",
     "History-focused E1.3d1. Digital Media LSB State/Value Modulation"),
    ("e1.1N1.", "E1.1n1. Network Reserved/Unused State/Value Modulation"),
    ("passive (semi-active) E1.", "Semi-active E1. State/Value Modulation"),
    ("passive E1.", "Passive E1. State/Value Modulation"),
    ("fully-passive E1.", "Fully-passive E1. State/Value Modulation"),
    ("local direct active single-level present-focused E1.", "E1. State/Value Modulation"),
    ("indirect (broker) E1.", "Indirect (Broker) E1. State/Value Modulation"),
    ("distributed (pattern combination) E1.", "Distributed (Pattern Combination) E1. State/Value Modulation"),
    ("distributed (flow-based scattering) E1.", "Distributed (Flow-based Scattering) E1. State/Value Modulation"),
    ("future-focused E1.", "Future-focused E1. State/Value Modulation"),
    ("MULTI-LEVEL (a) E1., (b) E2.",
     "Multi-level (a) E1. State/Value Modulation, (b) E2. Element Occurrence"),
])
def test_accepted_spellings(text, expected, taxonomy):
    assert normalize(text, taxonomy) == expected


@pytest.mark.parametrize("variant", [
    "Indirect (dead drop) E2.1t1.",
    "Indirect (Dead-drop) E2.1t1.",
    "Indirect (Dead Drop) E2.1t1.",
    "indirect (DeadDrop) E2.1t1.",
])
def test_alias_convergence_dead_drop(variant, taxonomy):
    assert normalize(variant, taxonomy) == "Indirect (Dead Drop) E2.1t1. Text Element Enumeration"


@pytest.mark.parametrize("variant", [
    "distributed (host-based scattered) E1.",
    "distributed (host-based scattering) E1.",
    "Distributed (Host-Based Scattering) E1.",
])
def test_alias_convergence_scattering(variant, taxonomy):
    assert normalize(variant, taxonomy) == "Distributed (Host-based Scattering) E1. State/Value Modulation"


def test_star_property_free_text_roundtrip(taxonomy):
    text = ("Distributed [key-based symbol, embedding position and cover data permutation] "
            "E1.3c1. CPS LSB State/Value Modulation")
    canonical = normalize(text, taxonomy)
    assert canonical == text
    d = parse_descriptor(text, taxonomy)
    assert d.star_properties[0].kind is StarPropertyKind.OTHER


def test_star_property_known_kinds(taxonomy):
    d = parse_descriptor("[reversible] [noise-free] E1.", taxonomy)
    assert [p.kind for p in d.star_properties] == [
        StarPropertyKind.REVERSIBLE, StarPropertyKind.NOISE_FREE,
    ]
    assert normalize("[reversible] [noise-free] E1.", taxonomy) == \
        "[reversible] [noise-free] E1. State/Value Modulation"


def test_loose_name_is_canonicalized_with_warning(taxonomy):
    result = analyze(TABLE_DESCRIPTORS["broker_dead_drop"], taxonomy)
    assert errors_only(result.diagnostics) == []
    assert [d.code for d in result.diagnostics] == [NAME_CODE_MISMATCH]
    assert result.descriptor.patterns[0].name == "Network Reserved/Unused State/Value Modulation"


def test_representation_code_in_pattern_slot_warns(taxonomy):
    result = analyze(TABLE_DESCRIPTORS["vm_migration_representation"], taxonomy)
    assert errors_only(result.diagnostics) == []
    assert REPRESENTATION_IN_EMBEDDING_SLOT in [d.code for d in result.diagnostics]


def test_abbreviated_table_name_accepted(taxonomy):
    # the knowledge base abbreviates 'Modulation' for the generic patterns
    assert normalize("E1.3. LSB State/Value Modulation", taxonomy) == "E1.3. LSB State/Value Mod."


# -- rejected inputs -----------------------------------------------------------


def error_codes(text, taxonomy):
    return [d.code for d in errors_only(analyze(text, taxonomy).diagnostics)]


def test_bare_indirect_is_error(taxonomy):
    assert error_codes("indirect E1.", taxonomy) == [MISSING_INDIRECT_PATTERN]


def test_unknown_indirect_pattern(taxonomy):
    assert error_codes("indirect (nonsense) E1.", taxonomy) == [SYNTAX_ERROR]


def test_unknown_pattern_code(taxonomy):
    assert error_codes("E9.7. Something", taxonomy) == [UNKNOWN_PATTERN_CODE]


def test_unknown_media_letter_fails_validation(taxonomy):
    # x is not a media domain shipped with the seed taxonomy
    assert error_codes("E1.3x1.", taxonomy) == [UNKNOWN_PATTERN_CODE]


def test_unrelated_name_is_error(taxonomy):
    assert error_codes("E1.3n1. Element Enumeration", taxonomy) == [NAME_CODE_MISMATCH]


def test_multi_level_single_clause_is_error(taxonomy):
    assert error_codes("multi-level E1.", taxonomy) == [MULTI_LEVEL_ARITY]


def test_unlabeled_multiple_clauses_is_error(taxonomy):
    assert LABEL_ERROR in error_codes("E1. State/Value Modulation, E2.", taxonomy)


def test_noncontiguous_labels_are_error(taxonomy):
    assert LABEL_ERROR in error_codes("(a) E1., (c) E2.", taxonomy)
    assert LABEL_ERROR in error_codes("(b) E1., (a) E2.", taxonomy)


def test_single_labeled_clause_is_error(taxonomy):
    assert LABEL_ERROR in error_codes("(a) E1.", taxonomy)


def test_out_of_order_attribute_is_error(taxonomy):
    assert SYNTAX_ERROR in error_codes("E1. distributed", taxonomy)
    assert SYNTAX_ERROR in error_codes("semi-active distributed E1.", taxonomy)


def test_empty_descriptor_is_error(taxonomy):
    assert error_codes("", taxonomy) == [SYNTAX_ERROR]
    assert error_codes("   ", taxonomy) == [SYNTAX_ERROR]


def test_attributes_without_clause_is_error(taxonomy):
    assert error_codes("distributed (pattern hopping)", taxonomy) == [SYNTAX_ERROR]


def test_gibberish_code_is_error(taxonomy):
    assert MALFORMED_CODE in error_codes("hello world", taxonomy)


def test_parse_descriptor_raises(taxonomy):
    with pytest.raises(DescriptorError) as excinfo:
        parse_descriptor("indirect E1.", taxonomy)
    assert excinfo.value.diagnostics[0].code == MISSING_INDIRECT_PATTERN


# -- validate on constructed descriptors ---------------------------------------


def test_validate_clean_descriptor(taxonomy):
    d = Descriptor(
        locality=Locality(LocalityKind.DISTRIBUTED),
        patterns=(clause(taxonomy, "E1.3c1."),),
    )
    assert validate(d, taxonomy) == []


def test_validate_multi_level_arity(taxonomy):
    d = Descriptor(
        level=LevelCharacteristic.MULTI_LEVEL,
        patterns=(clause(taxonomy, "E1."),),
    )
    codes = [diag.code for diag in validate(d, taxonomy)]
    assert codes == [MULTI_LEVEL_ARITY]


def test_validate_unknown_code(taxonomy):
    code = parse_code("E1.3x1.")
    d = Descriptor(patterns=(PatternClause(code=code, name=""),))
    codes = [diag.code for diag in validate(d, taxonomy)]
    assert codes == [UNKNOWN_PATTERN_CODE]


def test_validate_label_rules(taxonomy):
    d = Descriptor(patterns=(clause(taxonomy, "E1.", label="a"), clause(taxonomy, "E2.", label="c")))
    assert [diag.code for diag in validate(d, taxonomy)] == [LABEL_ERROR]


def test_render_rejects_invalid(taxonomy):
    d = Descriptor(level=LevelCharacteristic.MULTI_LEVEL, patterns=(clause(taxonomy, "E1."),))
    with pytest.raises(ValidationFailed):
        render_canonical(d, taxonomy)


def test_model_constructors_enforce_basics(taxonomy):
    with pytest.raises(ValueError):
        Locality(LocalityKind.LOCAL, DistributionPattern.PATTERN_HOPPING)
    with pytest.raises(ValueError):
        Directness(DirectnessKind.INDIRECT, None)
    with pytest.raises(ValueError):
        Directness(DirectnessKind.DIRECT, IndirectPattern.PROXY)
    with pytest.raises(ValueError):
        StarProperty("")
    with pytest.raises(ValueError):
        Descriptor(patterns=())


# -- default invisibility -------------------------------------------------------


DEFAULT_TOKENS = ("local", "direct", "active", "single-level", "present-focused", "non-distributed")


def test_render_never_emits_default_tokens(taxonomy):
    d = parse_descriptor("non-distributed direct active single-level present-focused E1.", taxonomy)
    rendered = render_canonical(d, taxonomy).lower()
    words = rendered.replace("(", " ").replace(")", " ").split()
    for token in DEFAULT_TOKENS:
        assert token not in words


# -- explain -------------------------------------------------------------------


def test_explain_dead_drop_entries(taxonomy):
    d = parse_descriptor(TABLE_DESCRIPTORS["broker_dead_drop"], taxonomy)
    entries = explain(d, taxonomy)
    assert [e.component for e in entries] == ["Directness", "Hiding pattern"]
    directness = entries[0]
    assert directness.value == "Indirect (Dead Drop)"
    assert "the steganography object is stored on a third-party node" in directness.description
    pattern = entries[1]
    assert "reserved or unused" in pattern.description


def test_explain_all_defaults_single_entry(taxonomy):
    d = parse_descriptor("E1.", taxonomy)
    entries = explain(d, taxonomy)
    assert len(entries) == 1
    assert entries[0].component == "Hiding pattern"


def test_explain_two_pattern_composite_has_four_entries(taxonomy):
    d = parse_descriptor(COMPOSITE_DESCRIPTORS["scattered_two_patterns"], taxonomy)
    entries = explain(d, taxonomy)
    assert [e.component for e in entries] == [
        "Locality", "Directness", "Hiding pattern", "Hiding pattern",
    ]


def test_explain_rejects_invalid(taxonomy):
    d = Descriptor(level=LevelCharacteristic.MULTI_LEVEL, patterns=(clause(taxonomy, "E1."),))
    with pytest.raises(ValidationFailed):
        explain(d, taxonomy)


# -- diff ----------------------------------------------------------------------


def test_diff_reflexive(taxonomy):
    d = parse_descriptor(COMPOSITE_DESCRIPTORS["scattered_two_patterns"], taxonomy)
    assert diff(d, d) == []


def test_diff_direct_vs_dead_drop(taxonomy):
    a = parse_descriptor(TABLE_DESCRIPTORS["dicom_direct"], taxonomy)
    b = parse_descriptor(TABLE_DESCRIPTORS["dicom_dead_drop"], taxonomy)
    differences = diff(a, b)
    assert len(differences) == 1
    assert differences[0].component == "Directness"
    assert differences[0].left == "Direct"
    assert differences[0].right == "Indirect (Dead Drop)"


def test_diff_active_vs_semi_active(taxonomy):
    a = parse_descriptor(TABLE_DESCRIPTORS["dicom_direct"], taxonomy)
    b = parse_descriptor(TABLE_DESCRIPTORS["dicom_semi_active"], taxonomy)
    differences = diff(a, b)
    assert len(differences) == 1
    assert differences[0].component == "Activeness"
    assert (differences[0].left, differences[0].right) == ("Active", "Semi-active")


def test_diff_empty_iff_same_canonical(taxonomy):
    a = parse_descriptor("Indirect (Dead-drop) E2.1t1.", taxonomy)
    b = parse_descriptor("indirect (dead drop) E2.1t1. Text Element Enumeration", taxonomy)
    assert diff(a, b) == []
    assert render_canonical(a, taxonomy) == render_canonical(b, taxonomy)
