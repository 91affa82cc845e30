"""Controlled vocabularies for the descriptor attributes.

Holds the attribute enumerations, the keyword/alias tables used by the
parser, the canonical display forms, and the explanation texts served by
``explain`` and the web UI.
"""

from __future__ import annotations

from enum import Enum


class LocalityKind(str, Enum):
    LOCAL = "local"
    DISTRIBUTED = "distributed"


class DistributionPattern(str, Enum):
    PATTERN_VARIATION = "pattern variation"
    HOST_BASED_SCATTERING = "host-based scattering"
    FLOW_BASED_SCATTERING = "flow-based scattering"
    PROTOCOL_BASED_SCATTERING = "protocol-based scattering"
    PATTERN_COMBINATION = "pattern combination"
    PATTERN_HOPPING = "pattern hopping"


class DirectnessKind(str, Enum):
    DIRECT = "direct"
    INDIRECT = "indirect"


class IndirectPattern(str, Enum):
    REDIRECTOR = "redirector"
    BROKER = "broker"
    PROXY = "proxy"
    DEAD_DROP = "dead drop"


class Activeness(str, Enum):
    ACTIVE = "active"
    PASSIVE = "passive"
    SEMI_ACTIVE = "semi-active"
    SEMI_PASSIVE = "semi-passive"
    FULLY_PASSIVE = "fully-passive"


class LevelCharacteristic(str, Enum):
    SINGLE_LEVEL = "single-level"
    MULTI_LEVEL = "multi-level"


class ReferenceTemporality(str, Enum):
    PRESENT = "present-focused"
    HISTORY_FOCUSED = "history-focused"
    FUTURE_FOCUSED = "future-focused"


class StarPropertyKind(str, Enum):
    COVER_SELECTION = "cover selection"
    COVERLESS = "coverless"
    UNIDIRECTIONAL = "unidirectional"
    BIDIRECTIONAL = "bidirectional"
    BROADCAST = "broadcast"
    NOISY = "noisy"
    NOISE_FREE = "noise-free"
    PREDICTABLE_COVER = "predictable cover"
    VARIABLE_COVER = "variable cover"
    RANDOMIZED_COVER = "randomized cover"
    REVERSIBLE = "reversible"
    OTHER = "other"


def normalize_keyword(text: str) -> str:
    """Fold a keyword to its comparison form.

    Lowercases, turns hyphens into spaces, collapses whitespace, and maps
    the known spelling variants onto one token each.
    """
    tokens = text.lower().replace("-", " ").split()
    mapped = [_TOKEN_ALIASES.get(token, token) for token in tokens]
    return " ".join(mapped)


_TOKEN_ALIASES = {
    "scattered": "scattering",
    "deaddrop": "dead drop",
    "multilevel": "multi level",
}


# Parser keyword tables, keyed by normalize_keyword() output.

DISTRIBUTION_KEYWORDS = {
    "pattern variation": DistributionPattern.PATTERN_VARIATION,
    "host based scattering": DistributionPattern.HOST_BASED_SCATTERING,
    "flow based scattering": DistributionPattern.FLOW_BASED_SCATTERING,
    "protocol based scattering": DistributionPattern.PROTOCOL_BASED_SCATTERING,
    "pattern combination": DistributionPattern.PATTERN_COMBINATION,
    "pattern hopping": DistributionPattern.PATTERN_HOPPING,
}

INDIRECT_KEYWORDS = {
    "redirector": IndirectPattern.REDIRECTOR,
    "broker": IndirectPattern.BROKER,
    "proxy": IndirectPattern.PROXY,
    "dead drop": IndirectPattern.DEAD_DROP,
}

PASSIVENESS_KEYWORDS = {
    "passive": Activeness.PASSIVE,
    "semi active": Activeness.SEMI_ACTIVE,
    "semi passive": Activeness.SEMI_PASSIVE,
    "fully passive": Activeness.FULLY_PASSIVE,
}

ACTIVENESS_KEYWORDS = dict(PASSIVENESS_KEYWORDS, active=Activeness.ACTIVE)

LEVEL_KEYWORDS = {
    "multi level": LevelCharacteristic.MULTI_LEVEL,
    "single level": LevelCharacteristic.SINGLE_LEVEL,
}

TEMPORALITY_KEYWORDS = {
    "history focused": ReferenceTemporality.HISTORY_FOCUSED,
    "future focused": ReferenceTemporality.FUTURE_FOCUSED,
    "present focused": ReferenceTemporality.PRESENT,
}

LOCALITY_KEYWORDS = {
    "distributed": LocalityKind.DISTRIBUTED,
    "non distributed": LocalityKind.LOCAL,
    "local": LocalityKind.LOCAL,
}

# Every single-word-or-hyphenated attribute keyword; used to flag
# out-of-order attribute tokens once clause parsing has started.
ATTRIBUTE_KEYWORDS = (
    set(LOCALITY_KEYWORDS)
    | {"direct", "indirect"}
    | set(ACTIVENESS_KEYWORDS)
    | set(LEVEL_KEYWORDS)
    | set(TEMPORALITY_KEYWORDS)
)

STAR_TEXT_KINDS = {
    "cover selection": StarPropertyKind.COVER_SELECTION,
    "coverless": StarPropertyKind.COVERLESS,
    "coverless steganography": StarPropertyKind.COVERLESS,
    "unidirectional": StarPropertyKind.UNIDIRECTIONAL,
    "bidirectional": StarPropertyKind.BIDIRECTIONAL,
    "broadcast": StarPropertyKind.BROADCAST,
    "noisy": StarPropertyKind.NOISY,
    "noise free": StarPropertyKind.NOISE_FREE,
    "predictable": StarPropertyKind.PREDICTABLE_COVER,
    "predictable cover": StarPropertyKind.PREDICTABLE_COVER,
    "variable": StarPropertyKind.VARIABLE_COVER,
    "variable cover": StarPropertyKind.VARIABLE_COVER,
    "randomized": StarPropertyKind.RANDOMIZED_COVER,
    "randomized cover": StarPropertyKind.RANDOMIZED_COVER,
    "reversible": StarPropertyKind.REVERSIBLE,
}


def classify_star_text(text: str) -> StarPropertyKind:
    return STAR_TEXT_KINDS.get(normalize_keyword(text), StarPropertyKind.OTHER)


def display_token(value: str) -> str:
    """Canonical attribute spelling: first letter upper, rest as-is."""
    return value[:1].upper() + value[1:]


def display_subpattern(value: str) -> str:
    """Canonical sub-pattern spelling inside parentheses, e.g. 'Dead Drop'."""
    return " ".join(display_token(word) for word in value.split(" "))


# Explanation texts for the non-pattern attributes. Pattern descriptions
# come from the taxonomy records instead.

DISTRIBUTED_DESCRIPTION = (
    "The secret message is spread over multiple cover objects, or multiple "
    "hiding methods are applied, instead of using a single local channel."
)

DISTRIBUTION_DESCRIPTIONS = {
    DistributionPattern.PATTERN_VARIATION:
        "The same hiding pattern is applied to different carrier objects "
        "(e.g., the same bit-modulation in two different header formats).",
    DistributionPattern.HOST_BASED_SCATTERING:
        "Secret message bits are scattered across different hosts.",
    DistributionPattern.FLOW_BASED_SCATTERING:
        "Secret message bits are scattered across multiple traffic flows.",
    DistributionPattern.PROTOCOL_BASED_SCATTERING:
        "Secret message bits are scattered across multiple protocols.",
    DistributionPattern.PATTERN_COMBINATION:
        "Multiple hiding patterns are applied to the same carrier object.",
    DistributionPattern.PATTERN_HOPPING:
        "The hiding method in use alternates, possibly pseudo-randomly.",
}

INDIRECT_DESCRIPTIONS = {
    IndirectPattern.REDIRECTOR:
        "A covert sender forces a third-party node to unintentionally "
        "redirect steganography objects to the covert receiver, e.g., via a "
        "request carrying a spoofed sender address that the third party "
        "answers to the covert receiver.",
    IndirectPattern.BROKER:
        "A third-party node is manipulated so that steganography objects "
        "can be extracted from it by a covert receiver; refined by the "
        "proxy and dead drop sub-variants.",
    IndirectPattern.PROXY:
        "Sub-variant of the broker: the covert sender influences a "
        "third-party node so that the influence itself (e.g., measurable "
        "load on a shared process) can be recognized by the covert receiver.",
    IndirectPattern.DEAD_DROP:
        "Sub-variant of the broker: the steganography object is stored on "
        "a third-party node (e.g., a cache or message store) and later read "
        "out by the covert receiver.",
}

ACTIVENESS_DESCRIPTIONS = {
    Activeness.ACTIVE:
        "The covert sender creates the cover object itself and the covert "
        "receiver is its overt recipient.",
    Activeness.PASSIVE:
        "The covert sender embeds into a third-party cover object and the "
        "covert receiver picks the message up without being the overt "
        "recipient, e.g., as an on-path observer.",
    Activeness.SEMI_ACTIVE:
        "Mixed form: the covert sender creates the cover object, but the "
        "covert receiver is not its overt recipient and instead observes "
        "traffic addressed to others.",
    Activeness.SEMI_PASSIVE:
        "Mixed form: the covert sender embeds into a third-party cover "
        "object while the covert receiver is the overt recipient.",
    Activeness.FULLY_PASSIVE:
        "Neither sender nor receiver modifies the cover object: the sender "
        "merely points to it and the receiver observes it by eavesdropping "
        "or as a broadcast receiver.",
}

MULTI_LEVEL_DESCRIPTION = (
    "Steganography objects are nested inside other steganography objects; "
    "each layer may use a different hiding pattern and the clauses are "
    "listed outermost layer first."
)

TEMPORALITY_DESCRIPTIONS = {
    ReferenceTemporality.HISTORY_FOCUSED:
        "The channel carries pointers to already existing (historic) data "
        "rather than the secret data itself.",
    ReferenceTemporality.FUTURE_FOCUSED:
        "The channel carries pointers to anticipated future data rather "
        "than the secret data itself.",
    ReferenceTemporality.PRESENT:
        "The secret data is embedded in the cover object itself rather "
        "than referenced through pointers.",
}

STAR_KIND_DESCRIPTIONS = {
    StarPropertyKind.COVER_SELECTION:
        "A cover object is selected, rather than modified, so that it "
        "already encodes the intended secret.",
    StarPropertyKind.COVERLESS:
        "No classical cover object is modified to convey the secret.",
    StarPropertyKind.UNIDIRECTIONAL:
        "The channel transfers secret data in one direction only.",
    StarPropertyKind.BIDIRECTIONAL:
        "The channel transfers secret data in both directions.",
    StarPropertyKind.BROADCAST:
        "The channel transfers secret data to many receivers at once.",
    StarPropertyKind.NOISY:
        "The channel is noisy: embedded data may be disturbed in transit.",
    StarPropertyKind.NOISE_FREE:
        "The channel is noise-free: embedded data arrives undisturbed.",
    StarPropertyKind.PREDICTABLE_COVER:
        "The cover content is predictable for the communicating parties.",
    StarPropertyKind.VARIABLE_COVER:
        "The cover content varies between transmissions.",
    StarPropertyKind.RANDOMIZED_COVER:
        "The cover content is randomized.",
    StarPropertyKind.REVERSIBLE:
        "An (intermediate) covert receiver can restore the cover object to "
        "its state before the secret message was embedded.",
}
