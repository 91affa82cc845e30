"""Diagnostic records returned by the validators.

Diagnostic codes are stable identifiers intended for machine consumption;
the full list is documented in docs/diagnostics.md.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


# Stable diagnostic codes.
SYNTAX_ERROR = "syntax-error"
MALFORMED_CODE = "malformed-code"
UNKNOWN_PATTERN_CODE = "unknown-pattern-code"
NAME_CODE_MISMATCH = "name-code-mismatch"
MISSING_INDIRECT_PATTERN = "missing-indirect-pattern"
LABEL_ERROR = "label-error"
MULTI_LEVEL_ARITY = "multi-level-arity"
EMPTY_STAR_PROPERTY = "empty-star-property"
STRAY_TRAILING_PAREN = "stray-trailing-paren"
REPRESENTATION_IN_EMBEDDING_SLOT = "representation-in-embedding-slot"
EMBEDDING_IN_REPRESENTATION_SLOT = "embedding-in-representation-slot"
INDIRECTNESS_MISMATCH = "indirectness-mismatch"
MISSING_REQUIRED_FIELD = "missing-required-field"


@dataclass(frozen=True)
class Diagnostic:
    code: str
    severity: Severity
    message: str
    span: tuple[int, int] | None = None

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "severity": self.severity.value,
            "message": self.message,
            "span": list(self.span) if self.span else None,
        }

    def __str__(self) -> str:
        where = f" at {self.span[0]}..{self.span[1]}" if self.span else ""
        return f"{self.severity.value}[{self.code}]{where}: {self.message}"


def error(code: str, message: str, span: tuple[int, int] | None = None) -> Diagnostic:
    return Diagnostic(code=code, severity=Severity.ERROR, message=message, span=span)


def warning(code: str, message: str, span: tuple[int, int] | None = None) -> Diagnostic:
    return Diagnostic(code=code, severity=Severity.WARNING, message=message, span=span)


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.is_error for d in diagnostics)


def errors_only(diagnostics: list[Diagnostic]) -> list[Diagnostic]:
    return [d for d in diagnostics if d.is_error]
