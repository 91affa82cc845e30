"""Unified method-description documents.

A document describes one hiding method with a fixed attribute set:
scenario, embedding/representation descriptor strings, required cover
properties, channel properties, and an optional channel-internal protocol.
Documents serialize to UTF-8 JSON (schema in docs/file-formats.md).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .codes import PatternKind, derive_representation
from .descriptor import (
    Descriptor,
    ValidationFailed,
    analyze,
    normalize,
    render_canonical,
)
from .diagnostics import (
    Diagnostic,
    EMBEDDING_IN_REPRESENTATION_SLOT,
    INDIRECTNESS_MISMATCH,
    MISSING_REQUIRED_FIELD,
    REPRESENTATION_IN_EMBEDDING_SLOT,
    error,
    errors_only,
    has_errors,
)
from .errors import StegotaxError
from .taxonomy import Taxonomy
from .vocab import DirectnessKind

# Marker value for the representation field meaning: every representation
# pattern is the representation variant of the paired embedding pattern.
REPRESENTATION_VARIANT_OF_EMBEDDING = "representation variant of embedding pattern"


class UdmError(StegotaxError):
    pass


class UdmParseError(UdmError):
    """Document text is not valid JSON or has a structurally wrong field."""


class MissingRequiredField(UdmParseError):
    pass


@dataclass(frozen=True)
class ChannelProperties:
    robustness: str = ""
    countermeasures: tuple[str, ...] = ()
    capacity: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "countermeasures", tuple(self.countermeasures))


@dataclass(frozen=True, kw_only=True)
class UdmDocument:
    method_name: str
    application_scenario: str = ""
    embedding_patterns: tuple[str, ...]
    representation_patterns: str | tuple[str, ...] = REPRESENTATION_VARIANT_OF_EMBEDDING
    required_cover_properties: tuple[str, ...] = ()
    channel_properties: ChannelProperties = ChannelProperties()
    channel_internal_protocol: str | None = None
    references: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "embedding_patterns", tuple(self.embedding_patterns))
        object.__setattr__(self, "required_cover_properties", tuple(self.required_cover_properties))
        object.__setattr__(self, "references", tuple(self.references))
        if not isinstance(self.representation_patterns, str):
            object.__setattr__(self, "representation_patterns", tuple(self.representation_patterns))

    @property
    def uses_representation_marker(self) -> bool:
        return isinstance(self.representation_patterns, str)


def _field_diagnostics(
    field: str, text: str, taxonomy: Taxonomy, expected_kind: PatternKind
) -> tuple[list[Diagnostic], Descriptor | None]:
    """Re-run descriptor analysis for one pattern field, prefixing messages."""
    out: list[Diagnostic] = []
    result = analyze(text, taxonomy)
    for diag in result.diagnostics:
        if diag.code == REPRESENTATION_IN_EMBEDDING_SLOT and expected_kind is PatternKind.REPRESENTATION:
            continue  # representation codes are exactly what this field holds
        out.append(Diagnostic(diag.code, diag.severity, f"{field}: {diag.message}", None))
    if result.descriptor is None:
        return out, None
    for clause in result.descriptor.patterns:
        if clause.code.kind is expected_kind:
            continue
        if expected_kind is PatternKind.EMBEDDING:
            out.append(error(
                REPRESENTATION_IN_EMBEDDING_SLOT,
                f"{field}: {clause.code} is a representation pattern; embedding descriptors must use "
                "embedding (E) codes",
            ))
        else:
            out.append(error(
                EMBEDDING_IN_REPRESENTATION_SLOT,
                f"{field}: {clause.code} is an embedding pattern; representation descriptors must use "
                "representation (R) codes",
            ))
    return out, result.descriptor


def validate_udm(doc: UdmDocument, taxonomy: Taxonomy) -> list[Diagnostic]:
    """Check a document against its invariants; empty list means valid.

    Embedding descriptors must normalize cleanly and use only E codes; an
    explicit representation list must normalize cleanly and use only R
    codes; when any embedding descriptor is indirect, every explicit
    representation descriptor must be indirect with a matching pattern.
    """
    diagnostics: list[Diagnostic] = []
    if not doc.method_name.strip():
        diagnostics.append(error(MISSING_REQUIRED_FIELD, "method_name must not be empty"))
    if not doc.embedding_patterns:
        diagnostics.append(error(MISSING_REQUIRED_FIELD, "embedding_patterns must not be empty"))

    embedding_indirect: set[str] = set()
    for i, text in enumerate(doc.embedding_patterns):
        field = f"embedding_patterns[{i}]"
        field_diags, descriptor = _field_diagnostics(field, text, taxonomy, PatternKind.EMBEDDING)
        diagnostics.extend(field_diags)
        if descriptor is not None and descriptor.directness.kind is DirectnessKind.INDIRECT:
            embedding_indirect.add(descriptor.directness.indirect_pattern.value)

    if not doc.uses_representation_marker:
        if not doc.representation_patterns:
            diagnostics.append(error(
                MISSING_REQUIRED_FIELD,
                "representation_patterns must be a non-empty list or the "
                f"marker {REPRESENTATION_VARIANT_OF_EMBEDDING!r}",
            ))
        for i, text in enumerate(doc.representation_patterns):
            field = f"representation_patterns[{i}]"
            field_diags, descriptor = _field_diagnostics(field, text, taxonomy, PatternKind.REPRESENTATION)
            diagnostics.extend(field_diags)
            if not embedding_indirect or descriptor is None:
                continue
            directness = descriptor.directness
            if directness.kind is not DirectnessKind.INDIRECT:
                diagnostics.append(error(
                    INDIRECTNESS_MISMATCH,
                    f"{field}: embedding side is indirect, so the representation descriptor must "
                    "carry the same indirect pattern",
                ))
            elif directness.indirect_pattern.value not in embedding_indirect:
                diagnostics.append(error(
                    INDIRECTNESS_MISMATCH,
                    f"{field}: indirect pattern {directness.indirect_pattern.value!r} does not match "
                    f"the embedding side ({', '.join(sorted(embedding_indirect))})",
                ))
    elif doc.representation_patterns != REPRESENTATION_VARIANT_OF_EMBEDDING:
        diagnostics.append(error(
            MISSING_REQUIRED_FIELD,
            f"representation_patterns must be a list or exactly {REPRESENTATION_VARIANT_OF_EMBEDDING!r}",
        ))
    return diagnostics


def resolve_representation(doc: UdmDocument, taxonomy: Taxonomy) -> list[str]:
    """The document's representation descriptors, always as explicit strings.

    Under the marker, each embedding descriptor is mapped clause-wise to
    its representation counterpart (attributes and labels preserved);
    otherwise the explicit list is returned in normalized form.
    """
    issues = validate_udm(doc, taxonomy)
    if has_errors(issues):
        raise ValidationFailed(errors_only(issues))
    if not doc.uses_representation_marker:
        return [normalize(text, taxonomy) for text in doc.representation_patterns]
    resolved = []
    for text in doc.embedding_patterns:
        descriptor = analyze(text, taxonomy).descriptor
        mirrored = []
        for clause in descriptor.patterns:
            code = derive_representation(clause.code)
            record = taxonomy.get(code)
            mirrored.append(replace(clause, code=code, name=record.name if record else ""))
        resolved.append(render_canonical(replace(descriptor, patterns=tuple(mirrored)), taxonomy))
    return resolved


def signature(doc: UdmDocument, taxonomy: Taxonomy) -> str:
    """Duplicate-detection key: sorted, newline-joined normalized embedding descriptors."""
    issues = validate_udm(doc, taxonomy)
    if has_errors(issues):
        raise ValidationFailed(errors_only(issues))
    return "\n".join(sorted(normalize(text, taxonomy) for text in doc.embedding_patterns))


def normalized_copy(doc: UdmDocument, taxonomy: Taxonomy) -> UdmDocument:
    """The same document with all descriptor strings in canonical form."""
    embedding = tuple(normalize(text, taxonomy) for text in doc.embedding_patterns)
    representation: str | tuple[str, ...]
    if doc.uses_representation_marker:
        representation = doc.representation_patterns
    else:
        representation = tuple(normalize(text, taxonomy) for text in doc.representation_patterns)
    return replace(doc, embedding_patterns=embedding, representation_patterns=representation)


# --------------------------------------------------------------------------
# Serialization


def udm_to_dict(doc: UdmDocument) -> dict:
    data = {
        "method_name": doc.method_name,
        "application_scenario": doc.application_scenario,
        "embedding_patterns": list(doc.embedding_patterns),
        "representation_patterns": doc.representation_patterns
        if doc.uses_representation_marker else list(doc.representation_patterns),
        "required_cover_properties": list(doc.required_cover_properties),
        "channel_properties": {
            "robustness": doc.channel_properties.robustness,
            "countermeasures": list(doc.channel_properties.countermeasures),
            "capacity": doc.channel_properties.capacity,
        },
        "references": list(doc.references),
    }
    if doc.channel_internal_protocol is not None:
        data["channel_internal_protocol"] = doc.channel_internal_protocol
    return data


def _expect_str(data: dict, key: str, default: str | None = "") -> str:
    value = data.get(key, default)
    if value is None and default is None:
        raise MissingRequiredField(f"document field {key!r} is required")
    if not isinstance(value, str):
        raise UdmParseError(f"document field {key!r} must be a string")
    return value


def _expect_str_list(value, key: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
        raise UdmParseError(f"document field {key!r} must be an array of strings")
    return tuple(value)


def udm_from_dict(data: dict) -> UdmDocument:
    if not isinstance(data, dict):
        raise UdmParseError("document must be a JSON object")
    method_name = _expect_str(data, "method_name", default=None)
    if not method_name.strip():
        raise MissingRequiredField("document field 'method_name' must not be empty")
    if "embedding_patterns" not in data:
        raise MissingRequiredField("document field 'embedding_patterns' is required")
    embedding = _expect_str_list(data["embedding_patterns"], "embedding_patterns")
    if not embedding:
        raise MissingRequiredField("document field 'embedding_patterns' must not be empty")

    representation: str | tuple[str, ...]
    raw_repr = data.get("representation_patterns", REPRESENTATION_VARIANT_OF_EMBEDDING)
    if isinstance(raw_repr, str):
        if raw_repr != REPRESENTATION_VARIANT_OF_EMBEDDING:
            raise UdmParseError(
                "representation_patterns must be an array of descriptor strings or "
                f"exactly {REPRESENTATION_VARIANT_OF_EMBEDDING!r}"
            )
        representation = raw_repr
    else:
        representation = _expect_str_list(raw_repr, "representation_patterns")
        if not representation:
            raise MissingRequiredField("document field 'representation_patterns' must not be empty")

    props = data.get("channel_properties", {})
    if not isinstance(props, dict):
        raise UdmParseError("document field 'channel_properties' must be an object")
    channel = ChannelProperties(
        robustness=_expect_str(props, "robustness"),
        countermeasures=_expect_str_list(props.get("countermeasures", []), "countermeasures"),
        capacity=_expect_str(props, "capacity"),
    )

    protocol = data.get("channel_internal_protocol")
    if protocol is not None and not isinstance(protocol, str):
        raise UdmParseError("document field 'channel_internal_protocol' must be a string")

    return UdmDocument(
        method_name=method_name,
        application_scenario=_expect_str(data, "application_scenario"),
        embedding_patterns=embedding,
        representation_patterns=representation,
        required_cover_properties=_expect_str_list(
            data.get("required_cover_properties", []), "required_cover_properties"
        ),
        channel_properties=channel,
        channel_internal_protocol=protocol,
        references=_expect_str_list(data.get("references", []), "references"),
    )


def serialize_udm(doc: UdmDocument) -> str:
    """Document as pretty-printed JSON; the inverse of deserialize_udm."""
    return json.dumps(udm_to_dict(doc), indent=2, ensure_ascii=False) + "\n"


def deserialize_udm(text: str) -> UdmDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UdmParseError(f"document is not valid JSON: {exc}") from exc
    return udm_from_dict(data)


def render_udm_text(doc: UdmDocument) -> str:
    """Human-readable rendering, one labeled section per document attribute."""
    lines = [
        f"Method: {doc.method_name}",
        f"Application scenario: {doc.application_scenario or '(none)'}",
        "Embedding hiding patterns:",
    ]
    lines.extend(f"  - {text}" for text in doc.embedding_patterns)
    lines.append("Representation hiding patterns:")
    if doc.uses_representation_marker:
        lines.append(f"  {doc.representation_patterns}")
    else:
        lines.extend(f"  - {text}" for text in doc.representation_patterns)
    lines.append("Required cover properties:")
    if doc.required_cover_properties:
        lines.extend(f"  - {text}" for text in doc.required_cover_properties)
    else:
        lines.append("  (none)")
    lines.append("Channel properties:")
    lines.append(f"  Robustness: {doc.channel_properties.robustness or '(unspecified)'}")
    if doc.channel_properties.countermeasures:
        lines.append("  Countermeasures:")
        lines.extend(f"    - {text}" for text in doc.channel_properties.countermeasures)
    else:
        lines.append("  Countermeasures: (none listed)")
    lines.append(f"  Capacity: {doc.channel_properties.capacity or '(unspecified)'}")
    lines.append(f"Channel-internal protocol: {doc.channel_internal_protocol or '(none)'}")
    lines.append("References:")
    if doc.references:
        lines.extend(f"  - {text}" for text in doc.references)
    else:
        lines.append("  (none)")
    return "\n".join(lines) + "\n"


def new_udm_template() -> dict:
    """Skeleton document dict for 'stegotax udm new'."""
    return {
        "method_name": "",
        "application_scenario": "",
        "embedding_patterns": [""],
        "representation_patterns": REPRESENTATION_VARIANT_OF_EMBEDDING,
        "required_cover_properties": [],
        "channel_properties": {"robustness": "", "countermeasures": [], "capacity": ""},
        "channel_internal_protocol": None,
        "references": [],
    }
