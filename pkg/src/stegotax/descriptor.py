"""Descriptor model and grammar.

A descriptor names a hiding method by listing, in fixed left-to-right
order: locality, directness, activeness, level characteristic,
reference-temporality, star properties, and one or more pattern clauses.
Default attribute values (local, direct, active, single-level,
present-focused) are omitted in canonical form but accepted as explicit
tokens on input. The grammar is documented as EBNF in docs/grammar.md.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import (
    MalformedCode,
    PatternCode,
    PatternKind,
    format_code,
    parse_code,
)
from .diagnostics import (
    Diagnostic,
    EMPTY_STAR_PROPERTY,
    LABEL_ERROR,
    MALFORMED_CODE,
    MISSING_INDIRECT_PATTERN,
    MULTI_LEVEL_ARITY,
    NAME_CODE_MISMATCH,
    REPRESENTATION_IN_EMBEDDING_SLOT,
    STRAY_TRAILING_PAREN,
    SYNTAX_ERROR,
    UNKNOWN_PATTERN_CODE,
    error,
    errors_only,
    has_errors,
    warning,
)
from .errors import StegotaxError
from .taxonomy import Taxonomy
from .vocab import (
    ACTIVENESS_DESCRIPTIONS,
    ACTIVENESS_KEYWORDS,
    ATTRIBUTE_KEYWORDS,
    Activeness,
    DISTRIBUTION_DESCRIPTIONS,
    DISTRIBUTED_DESCRIPTION,
    DISTRIBUTION_KEYWORDS,
    DirectnessKind,
    DistributionPattern,
    INDIRECT_DESCRIPTIONS,
    INDIRECT_KEYWORDS,
    IndirectPattern,
    LEVEL_KEYWORDS,
    LOCALITY_KEYWORDS,
    LevelCharacteristic,
    LocalityKind,
    MULTI_LEVEL_DESCRIPTION,
    PASSIVENESS_KEYWORDS,
    ReferenceTemporality,
    STAR_KIND_DESCRIPTIONS,
    StarPropertyKind,
    TEMPORALITY_KEYWORDS,
    classify_star_text,
    display_subpattern,
    display_token,
    normalize_keyword,
)


# --------------------------------------------------------------------------
# Model


@dataclass(frozen=True)
class Locality:
    kind: LocalityKind = LocalityKind.LOCAL
    distribution: DistributionPattern | None = None

    def __post_init__(self) -> None:
        if self.distribution is not None and self.kind is not LocalityKind.DISTRIBUTED:
            raise ValueError("a distribution pattern requires the distributed locality")


@dataclass(frozen=True)
class Directness:
    kind: DirectnessKind = DirectnessKind.DIRECT
    indirect_pattern: IndirectPattern | None = None

    def __post_init__(self) -> None:
        if (self.kind is DirectnessKind.INDIRECT) != (self.indirect_pattern is not None):
            raise ValueError("indirect channels carry exactly one indirect pattern")


@dataclass(frozen=True)
class StarProperty:
    """Free-form qualifier; the kind is derived from the text."""

    text: str

    def __post_init__(self) -> None:
        if not self.text.strip():
            raise ValueError("star property text must not be empty")
        if self.text != self.text.strip():
            raise ValueError("star property text must be trimmed")
        if "]" in self.text or "\n" in self.text:
            raise ValueError("star property text must not contain ']' or newlines")

    @property
    def kind(self) -> StarPropertyKind:
        return classify_star_text(self.text)


@dataclass(frozen=True)
class PatternClause:
    code: PatternCode
    name: str
    label: str | None = None


@dataclass(frozen=True, kw_only=True)
class Descriptor:
    locality: Locality = Locality()
    directness: Directness = Directness()
    activeness: Activeness = Activeness.ACTIVE
    level: LevelCharacteristic = LevelCharacteristic.SINGLE_LEVEL
    temporality: ReferenceTemporality = ReferenceTemporality.PRESENT
    star_properties: tuple[StarProperty, ...] = ()
    patterns: tuple[PatternClause, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "star_properties", tuple(self.star_properties))
        object.__setattr__(self, "patterns", tuple(self.patterns))
        if not self.patterns:
            raise ValueError("a descriptor requires at least one pattern clause")


@dataclass(frozen=True)
class ExplanationEntry:
    component: str
    value: str
    description: str

    def to_dict(self) -> dict:
        return {"component": self.component, "value": self.value, "description": self.description}


@dataclass(frozen=True)
class ComponentDifference:
    component: str
    left: str
    right: str

    def to_dict(self) -> dict:
        return {"component": self.component, "left": self.left, "right": self.right}


class DescriptorError(StegotaxError):
    """Raised when a descriptor cannot be parsed or fails validation."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics) or "invalid descriptor")


class ValidationFailed(DescriptorError):
    pass


@dataclass
class ParseResult:
    """Outcome of ``analyze``: best-effort descriptor plus all diagnostics."""

    descriptor: Descriptor | None
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return self.descriptor is not None and not has_errors(self.diagnostics)


# --------------------------------------------------------------------------
# Lexer


@dataclass(frozen=True)
class _Token:
    kind: str  # word | group | star | comma | rparen
    text: str
    start: int
    end: int
    inner: str = ""

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


_WORD_DELIMITERS = set("()[],")


def _lex(text: str) -> tuple[list[_Token], list[Diagnostic]]:
    tokens: list[_Token] = []
    diagnostics: list[Diagnostic] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "(":
            close = text.find(")", i + 1)
            if close == -1:
                diagnostics.append(error(SYNTAX_ERROR, "unterminated '('", (i, n)))
                break
            tokens.append(_Token("group", text[i:close + 1], i, close + 1, text[i + 1:close].strip()))
            i = close + 1
        elif ch == "[":
            close = text.find("]", i + 1)
            if close == -1:
                diagnostics.append(error(SYNTAX_ERROR, "unterminated '['", (i, n)))
                break
            tokens.append(_Token("star", text[i:close + 1], i, close + 1, text[i + 1:close]))
            i = close + 1
        elif ch == ",":
            tokens.append(_Token("comma", ",", i, i + 1))
            i += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ")", i, i + 1))
            i += 1
        elif ch == "]":
            diagnostics.append(error(SYNTAX_ERROR, "unexpected ']'", (i, i + 1)))
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in _WORD_DELIMITERS:
                j += 1
            tokens.append(_Token("word", text[i:j], i, j))
            i = j
    return tokens, diagnostics


def _keyword(token: _Token) -> str:
    return normalize_keyword(token.inner if token.kind == "group" else token.text)


def _is_label(token: _Token) -> bool:
    inner = token.inner.strip()
    return token.kind == "group" and len(inner) == 1 and inner.isalpha()


def _looks_like_code(text: str) -> bool:
    try:
        parse_code(text)
    except MalformedCode:
        return False
    return True


# --------------------------------------------------------------------------
# Parsing


def analyze(text: str, taxonomy: Taxonomy) -> ParseResult:
    """Parse and check a descriptor string, collecting every diagnostic.

    Always returns; the descriptor is the best-effort reading of the input
    and is None only when no pattern clause could be recovered.
    """
    diagnostics: list[Diagnostic] = []
    tokens, lex_diags = _lex(text)
    diagnostics.extend(lex_diags)
    if not tokens:
        diagnostics.append(error(SYNTAX_ERROR, "empty descriptor", (0, len(text))))
        return ParseResult(None, diagnostics)

    pos = 0

    def current() -> _Token | None:
        return tokens[pos] if pos < len(tokens) else None

    # Locality.
    locality = Locality()
    tok = current()
    if tok and tok.kind in ("word", "group") and not _is_label(tok) and _keyword(tok) in LOCALITY_KEYWORDS:
        kind = LOCALITY_KEYWORDS[_keyword(tok)]
        was_word = tok.kind == "word"
        pos += 1
        distribution = None
        nxt = current()
        if (
            kind is LocalityKind.DISTRIBUTED
            and was_word
            and nxt is not None
            and nxt.kind == "group"
            and normalize_keyword(nxt.inner) in DISTRIBUTION_KEYWORDS
        ):
            distribution = DISTRIBUTION_KEYWORDS[normalize_keyword(nxt.inner)]
            pos += 1
        locality = Locality(kind=kind, distribution=distribution)

    # Directness.
    directness = Directness()
    tok = current()
    if tok and tok.kind in ("word", "group") and _keyword(tok) in ("indirect", "direct"):
        explicit_indirect = _keyword(tok) == "indirect"
        indirect_span = tok.span
        pos += 1
        if explicit_indirect:
            nxt = current()
            if nxt is not None and nxt.kind == "group" and normalize_keyword(nxt.inner) in INDIRECT_KEYWORDS:
                directness = Directness(DirectnessKind.INDIRECT, INDIRECT_KEYWORDS[normalize_keyword(nxt.inner)])
                pos += 1
            elif nxt is not None and nxt.kind == "group":
                diagnostics.append(error(
                    SYNTAX_ERROR,
                    f"unknown indirect pattern {nxt.inner!r}; expected redirector, broker, proxy, or dead drop",
                    nxt.span,
                ))
                pos += 1
            else:
                diagnostics.append(error(
                    MISSING_INDIRECT_PATTERN,
                    "'indirect' requires its pattern in parentheses, e.g. 'indirect (dead drop)'",
                    indirect_span,
                ))

    # Activeness.
    activeness = Activeness.ACTIVE
    tok = current()
    if tok and tok.kind == "word" and _keyword(tok) == "passive":
        pos += 1
        activeness = Activeness.PASSIVE
        nxt = current()
        if nxt is not None and nxt.kind == "group":
            refinement = normalize_keyword(nxt.inner)
            if refinement in PASSIVENESS_KEYWORDS and refinement != "passive":
                activeness = PASSIVENESS_KEYWORDS[refinement]
                pos += 1
    elif tok and tok.kind in ("word", "group") and not _is_label(tok) and _keyword(tok) in ACTIVENESS_KEYWORDS:
        activeness = ACTIVENESS_KEYWORDS[_keyword(tok)]
        pos += 1

    # Level characteristic.
    level = LevelCharacteristic.SINGLE_LEVEL
    tok = current()
    if tok and tok.kind in ("word", "group") and _keyword(tok) in LEVEL_KEYWORDS:
        level = LEVEL_KEYWORDS[_keyword(tok)]
        pos += 1

    # Reference-temporality.
    temporality = ReferenceTemporality.PRESENT
    tok = current()
    if tok and tok.kind in ("word", "group") and _keyword(tok) in TEMPORALITY_KEYWORDS:
        temporality = TEMPORALITY_KEYWORDS[_keyword(tok)]
        pos += 1

    # Star properties.
    stars: list[StarProperty] = []
    while (tok := current()) is not None and tok.kind == "star":
        content = " ".join(tok.inner.split())
        if content:
            stars.append(StarProperty(content))
        else:
            diagnostics.append(error(EMPTY_STAR_PROPERTY, "star property must not be empty", tok.span))
        pos += 1

    # Pattern clauses.
    clauses, clause_diags = _parse_clauses(tokens[pos:], taxonomy, end=len(text))
    diagnostics.extend(clause_diags)
    if not clauses:
        return ParseResult(None, diagnostics)

    descriptor = Descriptor(
        locality=locality,
        directness=directness,
        activeness=activeness,
        level=level,
        temporality=temporality,
        star_properties=tuple(stars),
        patterns=tuple(clauses),
    )
    if level is LevelCharacteristic.MULTI_LEVEL and len(clauses) < 2:
        diagnostics.append(error(
            MULTI_LEVEL_ARITY,
            "multi-level descriptors require at least two pattern clauses, outermost layer first",
        ))
    return ParseResult(descriptor, diagnostics)


def _is_misplaced_attribute(token: _Token) -> bool:
    if token.kind == "word":
        return normalize_keyword(token.text) in ATTRIBUTE_KEYWORDS
    if token.kind == "group" and not _is_label(token):
        keyword = normalize_keyword(token.inner)
        return (
            keyword in ATTRIBUTE_KEYWORDS
            or keyword in DISTRIBUTION_KEYWORDS
            or keyword in INDIRECT_KEYWORDS
        )
    return False


def _parse_clauses(
    tokens: list[_Token], taxonomy: Taxonomy, end: int
) -> tuple[list[PatternClause], list[Diagnostic]]:
    diagnostics: list[Diagnostic] = []

    while tokens and _is_misplaced_attribute(tokens[0]):
        diagnostics.append(error(
            SYNTAX_ERROR,
            f"attribute token {tokens[0].text!r} out of order; components follow a fixed order",
            tokens[0].span,
        ))
        tokens = tokens[1:]

    if tokens and tokens[-1].kind == "rparen":
        diagnostics.append(warning(
            STRAY_TRAILING_PAREN, "ignoring unmatched ')' at the end of the descriptor", tokens[-1].span
        ))
        tokens = tokens[:-1]
    if not tokens:
        diagnostics.append(error(SYNTAX_ERROR, "expected a pattern clause", (end, end)))
        return [], diagnostics

    raw: list[tuple[str | None, _Token | None, list[_Token]]] = []

    def collect_name(i: int) -> tuple[list[_Token], int, bool]:
        """Gather name words until a separator; True means 'comma consumed'."""
        words: list[_Token] = []
        while i < len(tokens):
            t = tokens[i]
            if t.kind == "word":
                if normalize_keyword(t.text) in ATTRIBUTE_KEYWORDS:
                    diagnostics.append(error(
                        SYNTAX_ERROR,
                        f"attribute token {t.text!r} after the pattern clause; components follow a fixed order",
                        t.span,
                    ))
                    i += 1
                    continue
                words.append(t)
                i += 1
            elif t.kind == "comma":
                return words, i + 1, True
            elif t.kind == "group" and _is_label(t):
                return words, i, False
            else:
                diagnostics.append(error(SYNTAX_ERROR, f"unexpected {t.text!r} in pattern clause", t.span))
                i += 1
        return words, i, False

    if _is_label(tokens[0]):
        i = 0
        while i < len(tokens):
            t = tokens[i]
            if not _is_label(t):
                diagnostics.append(error(LABEL_ERROR, f"expected a clause label like '(b)', found {t.text!r}", t.span))
                while i < len(tokens) and not _is_label(tokens[i]):
                    i += 1
                continue
            label = t.inner.strip().lower()
            i += 1
            code_tok = None
            if i < len(tokens) and tokens[i].kind == "word":
                code_tok = tokens[i]
                i += 1
            else:
                diagnostics.append(error(SYNTAX_ERROR, "expected a pattern code after the clause label", t.span))
            words, i, _ = collect_name(i)
            if words and normalize_keyword(words[-1].text) == "and":
                words.pop()
            raw.append((label, code_tok, words))
        labels = [label for label, _, _ in raw]
        if len(raw) == 1:
            diagnostics.append(error(LABEL_ERROR, "a single pattern clause must not carry a label", tokens[0].span))
        else:
            expected = [chr(ord("a") + k) for k in range(len(labels))]
            if labels != expected:
                diagnostics.append(error(
                    LABEL_ERROR,
                    f"clause labels must run consecutively from '(a)'; got {', '.join(labels)}",
                    tokens[0].span,
                ))
    else:
        t = tokens[0]
        if t.kind != "word":
            diagnostics.append(error(SYNTAX_ERROR, f"expected a pattern code, found {t.text!r}", t.span))
            return [], diagnostics
        words, i, had_comma = collect_name(1)
        if had_comma or i < len(tokens):
            rest = tokens[i] if i < len(tokens) else None
            if (rest is not None and _is_label(rest)) or (
                rest is not None and rest.kind == "word" and _looks_like_code(rest.text)
            ):
                diagnostics.append(error(
                    LABEL_ERROR,
                    "descriptors with multiple pattern clauses must label every clause '(a)', '(b)', ...",
                    rest.span,
                ))
            elif had_comma:
                diagnostics.append(error(SYNTAX_ERROR, "unexpected ',' after the pattern clause", t.span))
        raw.append((None, t, words))

    clauses: list[PatternClause] = []
    for label, code_tok, words in raw:
        if code_tok is None:
            continue
        try:
            code = parse_code(code_tok.text)
        except MalformedCode:
            diagnostics.append(error(MALFORMED_CODE, f"not a pattern code: {code_tok.text!r}", code_tok.span))
            continue
        given = " ".join(w.text for w in words).strip() or None
        name_span = (words[0].start, words[-1].end) if words else code_tok.span
        name, name_diags = _resolve_name(code, given, taxonomy, code_tok.span, name_span)
        diagnostics.extend(name_diags)
        clauses.append(PatternClause(code=code, name=name, label=label))
    return clauses, diagnostics


def _name_tokens(name: str) -> list[str]:
    tokens = []
    for token in name.lower().replace("/", " ").replace("-", " ").split():
        token = token.rstrip(".")
        tokens.append("modulation" if token == "mod" else token)
    return tokens


def _is_subsequence(sub: list[str], seq: list[str]) -> bool:
    pos = 0
    for item in sub:
        while pos < len(seq) and seq[pos] != item:
            pos += 1
        if pos == len(seq):
            return False
        pos += 1
    return True


def _resolve_name(
    code: PatternCode,
    given: str | None,
    taxonomy: Taxonomy,
    code_span: tuple[int, int] | None,
    name_span: tuple[int, int] | None,
) -> tuple[str, list[Diagnostic]]:
    """Check a clause name against the taxonomy and return the canonical one.

    A name whose words form an ordered subsequence of the taxonomy name
    (e.g. dropping a qualifier) is tolerated with a warning and replaced by
    the taxonomy name; an unrelated name is an error and kept as given.
    """
    diagnostics: list[Diagnostic] = []
    record = taxonomy.get(code)
    if record is None:
        diagnostics.append(error(
            UNKNOWN_PATTERN_CODE, f"pattern code {format_code(code)} is not in the taxonomy", code_span
        ))
        return given or "", diagnostics
    if code.kind is PatternKind.REPRESENTATION:
        diagnostics.append(warning(
            REPRESENTATION_IN_EMBEDDING_SLOT,
            f"{format_code(code)} is a representation pattern; the descriptor pattern slot names embedding "
            "patterns, representation patterns belong in the representation field of a method description",
            code_span,
        ))
    if given is None:
        return record.name, diagnostics
    given_tokens = _name_tokens(given)
    record_tokens = _name_tokens(record.name)
    if given_tokens == record_tokens:
        return record.name, diagnostics
    if _is_subsequence(given_tokens, record_tokens):
        diagnostics.append(warning(
            NAME_CODE_MISMATCH,
            f"name {given!r} is a shortened form of the taxonomy name {record.name!r}; canonical name used",
            name_span,
        ))
        return record.name, diagnostics
    diagnostics.append(error(
        NAME_CODE_MISMATCH,
        f"name {given!r} does not match the taxonomy name for {format_code(code)} ({record.name!r})",
        name_span,
    ))
    return given, diagnostics


def parse_descriptor(text: str, taxonomy: Taxonomy) -> Descriptor:
    """Parse a descriptor string; raise DescriptorError on error diagnostics."""
    result = analyze(text, taxonomy)
    errs = errors_only(result.diagnostics)
    if errs or result.descriptor is None:
        raise DescriptorError(errs or result.diagnostics)
    return result.descriptor


# --------------------------------------------------------------------------
# Validation


def _structural_diagnostics(descriptor: Descriptor) -> list[Diagnostic]:
    diagnostics: list[Diagnostic] = []
    labels = [clause.label for clause in descriptor.patterns]
    if len(labels) == 1:
        if labels[0] is not None:
            diagnostics.append(error(LABEL_ERROR, "a single pattern clause must not carry a label"))
    else:
        expected = [chr(ord("a") + k) for k in range(len(labels))]
        if labels != expected:
            got = ", ".join(str(label) for label in labels)
            diagnostics.append(error(
                LABEL_ERROR, f"clause labels must run consecutively from '(a)'; got {got}"
            ))
    if descriptor.level is LevelCharacteristic.MULTI_LEVEL and len(descriptor.patterns) < 2:
        diagnostics.append(error(
            MULTI_LEVEL_ARITY,
            "multi-level descriptors require at least two pattern clauses, outermost layer first",
        ))
    return diagnostics


def validate(descriptor: Descriptor, taxonomy: Taxonomy) -> list[Diagnostic]:
    """Check a descriptor against the taxonomy; empty list means well-formed.

    Error-severity findings mark violated invariants; warnings flag
    tolerated deviations such as shortened pattern names or a
    representation-kind code in the pattern slot.
    """
    diagnostics = _structural_diagnostics(descriptor)
    for clause in descriptor.patterns:
        _, clause_diags = _resolve_name(clause.code, clause.name or None, taxonomy, None, None)
        diagnostics.extend(clause_diags)
    return diagnostics


# --------------------------------------------------------------------------
# Rendering


def locality_value(locality: Locality) -> str:
    if locality.kind is LocalityKind.LOCAL:
        return "Local"
    value = display_token(locality.kind.value)
    if locality.distribution is not None:
        value += f" ({display_subpattern(locality.distribution.value)})"
    return value


def directness_value(directness: Directness) -> str:
    if directness.kind is DirectnessKind.DIRECT:
        return "Direct"
    return f"Indirect ({display_subpattern(directness.indirect_pattern.value)})"


def render_clauses(patterns: tuple[PatternClause, ...], taxonomy: Taxonomy | None = None) -> str:
    rendered = []
    for clause in patterns:
        name = clause.name
        if taxonomy is not None:
            record = taxonomy.get(clause.code)
            if record is not None:
                name = record.name
        body = f"{format_code(clause.code)} {name}".strip()
        rendered.append(f"({clause.label}) {body}" if clause.label else body)
    return ", ".join(rendered)


def _render(descriptor: Descriptor, taxonomy: Taxonomy) -> str:
    parts: list[str] = []
    if descriptor.locality.kind is LocalityKind.DISTRIBUTED:
        parts.append(locality_value(descriptor.locality))
    if descriptor.directness.kind is DirectnessKind.INDIRECT:
        parts.append(directness_value(descriptor.directness))
    if descriptor.activeness is not Activeness.ACTIVE:
        parts.append(display_token(descriptor.activeness.value))
    if descriptor.level is LevelCharacteristic.MULTI_LEVEL:
        parts.append(display_token(descriptor.level.value))
    if descriptor.temporality is not ReferenceTemporality.PRESENT:
        parts.append(display_token(descriptor.temporality.value))
    for prop in descriptor.star_properties:
        parts.append(f"[{prop.text}]")
    parts.append(render_clauses(descriptor.patterns, taxonomy))
    return " ".join(parts)


def render_canonical(descriptor: Descriptor, taxonomy: Taxonomy) -> str:
    """Render the canonical descriptor string, omitting every default.

    Raises ValidationFailed when the descriptor has error-severity issues.
    """
    issues = validate(descriptor, taxonomy)
    if has_errors(issues):
        raise ValidationFailed(errors_only(issues))
    return _render(descriptor, taxonomy)


def normalize(text: str, taxonomy: Taxonomy) -> str:
    """Canonical form of a descriptor string; parse followed by render."""
    result = analyze(text, taxonomy)
    errs = errors_only(result.diagnostics)
    if errs or result.descriptor is None:
        raise DescriptorError(errs or result.diagnostics)
    return _render(result.descriptor, taxonomy)


# --------------------------------------------------------------------------
# Explanation and comparison


def explain(descriptor: Descriptor, taxonomy: Taxonomy) -> list[ExplanationEntry]:
    """One entry per non-default attribute and per pattern clause."""
    issues = validate(descriptor, taxonomy)
    if has_errors(issues):
        raise ValidationFailed(errors_only(issues))

    entries: list[ExplanationEntry] = []
    locality = descriptor.locality
    if locality.kind is LocalityKind.DISTRIBUTED:
        description = (
            DISTRIBUTION_DESCRIPTIONS[locality.distribution]
            if locality.distribution is not None
            else DISTRIBUTED_DESCRIPTION
        )
        entries.append(ExplanationEntry("Locality", locality_value(locality), description))
    directness = descriptor.directness
    if directness.kind is DirectnessKind.INDIRECT:
        entries.append(ExplanationEntry(
            "Directness", directness_value(directness), INDIRECT_DESCRIPTIONS[directness.indirect_pattern]
        ))
    if descriptor.activeness is not Activeness.ACTIVE:
        entries.append(ExplanationEntry(
            "Activeness",
            display_token(descriptor.activeness.value),
            ACTIVENESS_DESCRIPTIONS[descriptor.activeness],
        ))
    if descriptor.level is LevelCharacteristic.MULTI_LEVEL:
        entries.append(ExplanationEntry("Level characteristic", "Multi-level", MULTI_LEVEL_DESCRIPTION))
    if descriptor.temporality is not ReferenceTemporality.PRESENT:
        entries.append(ExplanationEntry(
            "Reference-temporality",
            display_token(descriptor.temporality.value),
            TEMPORALITY_DESCRIPTIONS[descriptor.temporality],
        ))
    for prop in descriptor.star_properties:
        entries.append(ExplanationEntry(
            "Star-property", prop.text, STAR_KIND_DESCRIPTIONS.get(prop.kind, prop.text)
        ))
    for clause in descriptor.patterns:
        record = taxonomy.get(clause.code)
        value = render_clauses((clause,), taxonomy)
        entries.append(ExplanationEntry("Hiding pattern", value, record.description if record else ""))
    return entries


def _activeness_value(activeness: Activeness) -> str:
    return display_token(activeness.value)


def _level_value(level: LevelCharacteristic) -> str:
    return display_token(level.value)


def _temporality_value(temporality: ReferenceTemporality) -> str:
    return display_token(temporality.value)


def _stars_value(props: tuple[StarProperty, ...]) -> str:
    return " ".join(f"[{p.text}]" for p in props) if props else "(none)"


def diff(a: Descriptor, b: Descriptor) -> list[ComponentDifference]:
    """Component-wise differences; empty iff the canonical renderings agree."""
    differences: list[ComponentDifference] = []

    def compare(component: str, left: str, right: str, equal: bool) -> None:
        if not equal:
            differences.append(ComponentDifference(component, left, right))

    compare("Locality", locality_value(a.locality), locality_value(b.locality), a.locality == b.locality)
    compare("Directness", directness_value(a.directness), directness_value(b.directness),
            a.directness == b.directness)
    compare("Activeness", _activeness_value(a.activeness), _activeness_value(b.activeness),
            a.activeness == b.activeness)
    compare("Level characteristic", _level_value(a.level), _level_value(b.level), a.level == b.level)
    compare("Reference-temporality", _temporality_value(a.temporality), _temporality_value(b.temporality),
            a.temporality == b.temporality)
    compare("Star-properties", _stars_value(a.star_properties), _stars_value(b.star_properties),
            a.star_properties == b.star_properties)
    compare("Patterns", render_clauses(a.patterns), render_clauses(b.patterns), a.patterns == b.patterns)
    return differences


def descriptor_to_dict(descriptor: Descriptor) -> dict:
    """JSON-ready structured form used by the CLI and the HTTP API."""
    return {
        "locality": {
            "kind": descriptor.locality.kind.value,
            "distribution": descriptor.locality.distribution.value
            if descriptor.locality.distribution is not None else None,
        },
        "directness": {
            "kind": descriptor.directness.kind.value,
            "indirect_pattern": descriptor.directness.indirect_pattern.value
            if descriptor.directness.indirect_pattern is not None else None,
        },
        "activeness": descriptor.activeness.value,
        "level": descriptor.level.value,
        "temporality": descriptor.temporality.value,
        "star_properties": [{"text": p.text, "kind": p.kind.value} for p in descriptor.star_properties],
        "patterns": [
            {"label": c.label, "code": format_code(c.code), "name": c.name}
            for c in descriptor.patterns
        ],
    }
