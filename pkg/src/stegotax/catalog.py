"""Persistent registry of method descriptions with duplicate detection.

The store is a directory: one JSON file per entry under ``entries/`` plus
a rebuildable ``index.json``. The entry files are the source of truth;
signatures are recomputed from the documents on open. Reads may run
concurrently; mutations follow a single-writer discipline per store.
"""

from __future__ import annotations

import json
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .codes import PatternCode, matches_prefix
from .descriptor import analyze
from .errors import StegotaxError
from .taxonomy import Taxonomy
from .udm import (
    UdmDocument,
    UdmParseError,
    ValidationFailed,
    normalized_copy,
    signature,
    udm_from_dict,
    udm_to_dict,
    validate_udm,
)
from .diagnostics import errors_only, has_errors

_INDEX_FILE = "index.json"
_ENTRIES_DIR = "entries"


class StorageError(StegotaxError):
    pass


class CorruptStore(StorageError):
    pass


class EntryNotFound(StegotaxError, LookupError):
    pass


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    document: UdmDocument
    signature: str
    created_at: str
    updated_at: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "signature": self.signature,
            "document": udm_to_dict(self.document),
        }


class Catalog:
    """In-memory catalog bound to a taxonomy, with directory persistence."""

    def __init__(self, taxonomy: Taxonomy):
        self.taxonomy = taxonomy
        self._entries: dict[str, CatalogEntry] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def add(self, doc: UdmDocument) -> tuple[CatalogEntry, list[str]]:
        """Store a document; returns the new entry and ids of entries with
        an equal signature. Duplicates are reported, never rejected."""
        issues = validate_udm(doc, self.taxonomy)
        if has_errors(issues):
            raise ValidationFailed(errors_only(issues))
        stored = normalized_copy(doc, self.taxonomy)
        sig = signature(stored, self.taxonomy)
        duplicates = [entry.id for entry in self._entries.values() if entry.signature == sig]
        now = _utcnow()
        entry = CatalogEntry(
            id=uuid.uuid4().hex,
            document=stored,
            signature=sig,
            created_at=now,
            updated_at=now,
        )
        self._entries[entry.id] = entry
        return entry, duplicates

    def get(self, entry_id: str) -> CatalogEntry:
        entry = self._entries.get(entry_id)
        if entry is None:
            raise EntryNotFound(f"no catalog entry with id {entry_id}")
        return entry

    def list_entries(self) -> list[CatalogEntry]:
        return list(self._entries.values())

    def remove(self, entry_id: str) -> CatalogEntry:
        entry = self._entries.pop(entry_id, None)
        if entry is None:
            raise EntryNotFound(f"no catalog entry with id {entry_id}")
        return entry

    def find_by_prefix(self, code: PatternCode) -> list[CatalogEntry]:
        """Entries whose any embedding clause code equals the given code or
        has it as a hierarchical prefix."""
        matching = []
        for entry in self._entries.values():
            if any(matches_prefix(code, clause) for clause in self._embedding_codes(entry)):
                matching.append(entry)
        return matching

    def _embedding_codes(self, entry: CatalogEntry) -> list[PatternCode]:
        codes: list[PatternCode] = []
        for text in entry.document.embedding_patterns:
            descriptor = analyze(text, self.taxonomy).descriptor
            if descriptor is not None:
                codes.extend(clause.code for clause in descriptor.patterns)
        return codes

    def find_duplicates(self) -> list[list[str]]:
        """Groups (size >= 2) of entry ids sharing a signature."""
        by_signature: dict[str, list[str]] = {}
        for entry in self._entries.values():
            by_signature.setdefault(entry.signature, []).append(entry.id)
        return [ids for ids in by_signature.values() if len(ids) >= 2]

    # -- persistence --------------------------------------------------------

    def persist(self, location: str | Path) -> None:
        """Write the catalog to a store directory, replacing its contents."""
        root = Path(location)
        entries_dir = root / _ENTRIES_DIR
        try:
            entries_dir.mkdir(parents=True, exist_ok=True)
            kept = set()
            for entry in self._entries.values():
                kept.add(f"{entry.id}.json")
                path = entries_dir / f"{entry.id}.json"
                path.write_text(
                    json.dumps(entry.to_dict(), indent=2, ensure_ascii=False) + "\n",
                    encoding="utf-8",
                )
            for stale in entries_dir.glob("*.json"):
                if stale.name not in kept:
                    stale.unlink()
            index = {
                "version": 1,
                "entries": [
                    {"id": e.id, "signature": e.signature, "file": f"{_ENTRIES_DIR}/{e.id}.json"}
                    for e in self._entries.values()
                ],
            }
            (root / _INDEX_FILE).write_text(
                json.dumps(index, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
            )
        except OSError as exc:
            raise StorageError(f"cannot write catalog store at {root}: {exc}") from exc

    @classmethod
    def open(cls, location: str | Path, taxonomy: Taxonomy) -> "Catalog":
        """Load a catalog from a store directory; a missing or empty
        directory yields an empty catalog."""
        catalog = cls(taxonomy)
        root = Path(location)
        index_path = root / _INDEX_FILE
        if index_path.exists():
            try:
                json.loads(index_path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise CorruptStore(f"unreadable index file {index_path}: {exc}") from exc
        entries_dir = root / _ENTRIES_DIR
        if not entries_dir.is_dir():
            return catalog
        loaded = []
        for path in sorted(entries_dir.glob("*.json")):
            try:
                data = json.loads(path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise CorruptStore(f"unreadable entry file {path}: {exc}") from exc
            if not isinstance(data, dict) or "id" not in data or "document" not in data:
                raise CorruptStore(f"entry file {path} misses required fields")
            try:
                document = udm_from_dict(data["document"])
                sig = signature(document, taxonomy)
            except (UdmParseError, ValidationFailed) as exc:
                raise CorruptStore(f"entry file {path} holds an invalid document: {exc}") from exc
            loaded.append(CatalogEntry(
                id=str(data["id"]),
                document=document,
                signature=sig,
                created_at=str(data.get("created_at", "")),
                updated_at=str(data.get("updated_at", "")),
            ))
        loaded.sort(key=lambda e: (e.created_at, e.id))
        for entry in loaded:
            if entry.id in catalog._entries:
                raise CorruptStore(f"duplicate entry id {entry.id} in store")
            catalog._entries[entry.id] = entry
        return catalog
