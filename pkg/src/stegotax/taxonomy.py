"""Pattern knowledge base: records, hierarchy checks, and file loading.

A taxonomy is loaded from a JSON file with top-level ``version`` (string)
and ``patterns`` (array of ``{code, name, description, parent, domain}``
objects, codes in canonical text form). A loaded taxonomy is immutable and
safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .codes import (
    MalformedCode,
    PatternCode,
    format_code,
    is_strict_prefix,
    parse_code,
)
from .errors import StegotaxError


class TaxonomyError(StegotaxError):
    """Base class for taxonomy loading and lookup failures."""


class TaxonomyParseError(TaxonomyError):
    """The taxonomy file is not valid JSON or misses required structure."""


class DuplicateCode(TaxonomyError):
    """Two records share the same canonical code."""


class DanglingParent(TaxonomyError):
    """A record references a parent code that is not in the file."""


class InvalidParent(TaxonomyError):
    """A record's parent exists but is not a strict hierarchical prefix."""


class PatternNotFound(TaxonomyError, LookupError):
    """No record exists for the requested code."""


@dataclass(frozen=True)
class PatternRecord:
    code: PatternCode
    name: str
    description: str
    parent: PatternCode | None
    domain_label: str

    @property
    def code_text(self) -> str:
        return format_code(self.code)


class Taxonomy:
    """Immutable collection of pattern records indexed by canonical code text."""

    def __init__(self, records: list[PatternRecord], version: str):
        self.version = version
        self._records: dict[str, PatternRecord] = {}
        for record in records:
            key = format_code(record.code)
            if key in self._records:
                raise DuplicateCode(f"duplicate pattern code {key}")
            self._records[key] = record
        self._check_parents()

    def _check_parents(self) -> None:
        for record in self._records.values():
            if record.parent is None:
                continue
            parent_key = format_code(record.parent)
            if parent_key not in self._records:
                raise DanglingParent(
                    f"{record.code_text} references missing parent {parent_key}"
                )
            if not is_strict_prefix(record.parent, record.code):
                raise InvalidParent(
                    f"{parent_key} is not a hierarchical prefix of {record.code_text}"
                )

    def __contains__(self, code: PatternCode) -> bool:
        return format_code(code) in self._records

    def __len__(self) -> int:
        return len(self._records)

    def get(self, code: PatternCode) -> PatternRecord | None:
        return self._records.get(format_code(code))

    def records(self) -> list[PatternRecord]:
        """All records, sorted by canonical code text."""
        return [self._records[key] for key in sorted(self._records)]


def lookup(taxonomy: Taxonomy, code: PatternCode) -> PatternRecord:
    """Return the record for ``code`` or raise PatternNotFound."""
    record = taxonomy.get(code)
    if record is None:
        raise PatternNotFound(f"unknown pattern code {format_code(code)}")
    return record


def children(taxonomy: Taxonomy, code: PatternCode) -> list[PatternRecord]:
    """All records strictly below ``code``, sorted by canonical code text."""
    return [
        record
        for record in taxonomy.records()
        if is_strict_prefix(code, record.code)
    ]


def load_taxonomy(content: str) -> Taxonomy:
    """Build a Taxonomy from taxonomy-file JSON text, checking all invariants."""
    try:
        raw = json.loads(content)
    except json.JSONDecodeError as exc:
        raise TaxonomyParseError(f"taxonomy file is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise TaxonomyParseError("taxonomy file must contain a JSON object")
    version = raw.get("version")
    patterns = raw.get("patterns")
    if not isinstance(version, str) or not version:
        raise TaxonomyParseError("taxonomy file requires a non-empty 'version' string")
    if not isinstance(patterns, list) or not patterns:
        raise TaxonomyParseError("taxonomy file requires a non-empty 'patterns' array")

    records = []
    for i, entry in enumerate(patterns):
        if not isinstance(entry, dict):
            raise TaxonomyParseError(f"patterns[{i}] must be an object")
        try:
            code = parse_code(entry["code"])
            parent = entry.get("parent")
            parent_code = parse_code(parent) if parent is not None else None
            name = entry["name"]
            description = entry.get("description", "")
            domain = entry.get("domain", "generic")
        except KeyError as exc:
            raise TaxonomyParseError(f"patterns[{i}] misses required field {exc}") from exc
        except MalformedCode as exc:
            raise TaxonomyParseError(f"patterns[{i}]: {exc}") from exc
        if not isinstance(name, str) or not name.strip():
            raise TaxonomyParseError(f"patterns[{i}] requires a non-empty 'name'")
        records.append(
            PatternRecord(
                code=code,
                name=name.strip(),
                description=str(description).strip(),
                parent=parent_code,
                domain_label=str(domain),
            )
        )
    return Taxonomy(records, version=version)


def load_taxonomy_file(path: str | Path) -> Taxonomy:
    try:
        content = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TaxonomyError(f"cannot read taxonomy file {path}: {exc}") from exc
    return load_taxonomy(content)


@lru_cache(maxsize=1)
def load_seed_taxonomy() -> Taxonomy:
    """The taxonomy shipped with the package."""
    content = resources.files("stegotax").joinpath("data/seed_taxonomy.json").read_text("utf-8")
    return load_taxonomy(content)
