"""Pattern-code algebra: parsing, formatting, hierarchy, and E-to-R derivation.

A pattern code identifies a hiding pattern. It consists of a kind letter
(``E`` for embedding, ``R`` for representation), a dot-separated numeric
path, and an optional media suffix (a domain letter plus a variant index),
e.g. ``E1.3n1.`` is the network variant of the LSB modulation pattern.
The canonical textual form always carries the variant index and a trailing
period; parsing accepts both as optional and is case-insensitive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import StegotaxError


class PatternKind(str, Enum):
    EMBEDDING = "E"
    REPRESENTATION = "R"


class MalformedCode(StegotaxError, ValueError):
    """The text (or field values) do not form a valid pattern code."""


class NotAnEmbeddingCode(StegotaxError, ValueError):
    """Representation derivation was requested for a non-embedding code."""


_CODE_RE = re.compile(r"^([ER])(\d+(?:\.\d+)*)([A-Z])?(\d+)?\.?$", re.IGNORECASE)


@dataclass(frozen=True)
class PatternCode:
    """Structured pattern identifier.

    ``media`` is a ``(domain letter, variant index)`` pair; the letter set
    is open here and only constrained by whichever taxonomy the code is
    validated against.
    """

    kind: PatternKind
    path: tuple[int, ...]
    media: tuple[str, int] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "path", tuple(self.path))
        if not self.path:
            raise MalformedCode("pattern code path must not be empty")
        if any(part < 1 for part in self.path):
            raise MalformedCode(f"path elements must be >= 1, got {self.path}")
        if self.media is not None:
            letter, index = self.media
            if len(letter) != 1 or not letter.isalpha():
                raise MalformedCode(f"media letter must be a single letter, got {letter!r}")
            if index < 1:
                raise MalformedCode(f"media variant index must be >= 1, got {index}")
            object.__setattr__(self, "media", (letter.lower(), index))

    @property
    def is_embedding(self) -> bool:
        return self.kind is PatternKind.EMBEDDING

    def __str__(self) -> str:
        return format_code(self)


def parse_code(text: str) -> PatternCode:
    """Parse a pattern-code string such as ``E1.3n1.`` into a PatternCode.

    The trailing period is optional, the kind and media letters are
    case-insensitive, and a media letter without an index means index 1.
    Raises MalformedCode if the text has a different structure.
    """
    token = text.strip()
    match = _CODE_RE.match(token)
    if not match:
        raise MalformedCode(f"not a pattern code: {text!r}")
    kind_letter, path_text, media_letter, index_text = match.groups()
    if index_text is not None and media_letter is None:
        # digits after the path but no media letter, e.g. "E1.3 7"
        raise MalformedCode(f"not a pattern code: {text!r}")
    kind = PatternKind(kind_letter.upper())
    path = tuple(int(part) for part in path_text.split("."))
    media = None
    if media_letter is not None:
        media = (media_letter.lower(), int(index_text) if index_text else 1)
    return PatternCode(kind=kind, path=path, media=media)


def format_code(code: PatternCode) -> str:
    """Render the canonical text form: explicit variant index, trailing period."""
    text = code.kind.value + ".".join(str(part) for part in code.path)
    if code.media is not None:
        letter, index = code.media
        text += f"{letter}{index}"
    return text + "."


def derive_representation(code: PatternCode) -> PatternCode:
    """Return the representation counterpart of an embedding code.

    Path and media suffix are preserved; only the kind changes.
    """
    if code.kind is not PatternKind.EMBEDDING:
        raise NotAnEmbeddingCode(f"{format_code(code)} is already a representation code")
    return PatternCode(kind=PatternKind.REPRESENTATION, path=code.path, media=code.media)


def is_strict_prefix(prefix: PatternCode, code: PatternCode) -> bool:
    """True if ``prefix`` sits strictly above ``code`` in the hierarchy.

    That holds when both share the kind and either the prefix path is a
    proper prefix of the code path, or the paths are equal and only the
    code carries a media suffix. A code with a media suffix is never a
    strict prefix of anything.
    """
    if prefix.kind is not code.kind or prefix.media is not None:
        return False
    if prefix.path == code.path:
        return code.media is not None
    return len(prefix.path) < len(code.path) and code.path[: len(prefix.path)] == prefix.path


def matches_prefix(query: PatternCode, code: PatternCode) -> bool:
    """True if ``code`` equals ``query`` or has it as a strict hierarchical prefix."""
    return code == query or is_strict_prefix(query, code)
