"""HTTP API over the library, plus static hosting for the web UI.

Thin, stateless wrappers: every endpoint is a deterministic function of
the request and the catalog store. The taxonomy is shared immutable
state; catalog mutations are serialized behind a lock and persisted after
each change. Endpoint reference in docs/http-api.md.

Configuration comes from arguments or the environment variables
``STEGOTAX_ADDR``, ``STEGOTAX_TAXONOMY``, ``STEGOTAX_STORE``.
"""

from __future__ import annotations

import os
import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .catalog import Catalog, EntryNotFound, StorageError
from .codes import (
    MalformedCode,
    NotAnEmbeddingCode,
    derive_representation,
    format_code,
    parse_code,
)
from .descriptor import (
    analyze,
    descriptor_to_dict,
    explain as explain_descriptor,
    render_canonical,
)
from .diagnostics import Diagnostic, has_errors
from .taxonomy import PatternRecord, Taxonomy, load_seed_taxonomy, load_taxonomy_file
from .udm import UdmParseError, udm_from_dict, validate_udm

DEFAULT_ADDR = "127.0.0.1:8765"


class DescriptorIn(BaseModel):
    descriptor: str


class CodeIn(BaseModel):
    code: str


def _api_error(status: int, code: str, message: str,
               diagnostics: list[Diagnostic] | None = None) -> JSONResponse:
    body = {"status": status, "code": code, "message": message}
    if diagnostics is not None:
        body["diagnostics"] = [d.to_dict() for d in diagnostics]
    return JSONResponse(status_code=status, content=body)


def _record_dict(record: PatternRecord) -> dict:
    return {
        "code": record.code_text,
        "name": record.name,
        "description": record.description,
        "parent": format_code(record.parent) if record.parent else None,
        "domain": record.domain_label,
    }


def _taxonomy_tree(taxonomy: Taxonomy) -> list[dict]:
    nodes = {r.code_text: dict(_record_dict(r), children=[]) for r in taxonomy.records()}
    roots = []
    for record in taxonomy.records():
        node = nodes[record.code_text]
        if record.parent is None:
            roots.append(node)
        else:
            nodes[format_code(record.parent)]["children"].append(node)
    return roots


def create_app(
    taxonomy: Taxonomy | None = None,
    store_path: str | Path | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    taxonomy = taxonomy or load_seed_taxonomy()
    catalog = Catalog.open(store_path, taxonomy) if store_path else Catalog(taxonomy)
    writer_lock = threading.Lock()

    app = FastAPI(title="stegotax", docs_url=None, redoc_url=None)
    app.state.taxonomy = taxonomy
    app.state.catalog = catalog

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        return _api_error(400, "bad-request", "malformed request body or parameters")

    @app.exception_handler(StorageError)
    async def _storage_fault(request: Request, exc: StorageError):
        return _api_error(500, "storage-error", str(exc))

    def _persist() -> None:
        if store_path:
            catalog.persist(store_path)

    # -- taxonomy ------------------------------------------------------------

    @app.get("/api/taxonomy")
    def taxonomy_tree():
        return {"version": taxonomy.version, "roots": _taxonomy_tree(taxonomy)}

    @app.get("/api/taxonomy/{code_text}")
    def taxonomy_record(code_text: str):
        try:
            code = parse_code(code_text)
        except MalformedCode as exc:
            return _api_error(400, "malformed-code", str(exc))
        record = taxonomy.get(code)
        if record is None:
            return _api_error(404, "unknown-pattern-code",
                              f"pattern code {format_code(code)} is not in the taxonomy")
        data = _record_dict(record)
        data["children"] = [r.code_text for r in taxonomy.records()
                            if r.parent is not None and format_code(r.parent) == record.code_text]
        return data

    # -- descriptors ---------------------------------------------------------

    @app.post("/api/parse")
    def parse_endpoint(body: DescriptorIn):
        result = analyze(body.descriptor, taxonomy)
        if result.descriptor is None or has_errors(result.diagnostics):
            return _api_error(400, "invalid-descriptor", "descriptor failed to parse",
                              result.diagnostics)
        return {
            "descriptor": descriptor_to_dict(result.descriptor),
            "canonical": render_canonical(result.descriptor, taxonomy),
            "diagnostics": [d.to_dict() for d in result.diagnostics],
        }

    @app.post("/api/normalize")
    def normalize_endpoint(body: DescriptorIn):
        result = analyze(body.descriptor, taxonomy)
        if result.descriptor is None or has_errors(result.diagnostics):
            return _api_error(400, "invalid-descriptor", "descriptor failed to parse",
                              result.diagnostics)
        return {
            "canonical": render_canonical(result.descriptor, taxonomy),
            "diagnostics": [d.to_dict() for d in result.diagnostics],
        }

    @app.post("/api/validate")
    def validate_endpoint(body: DescriptorIn):
        result = analyze(body.descriptor, taxonomy)
        ok = result.descriptor is not None and not has_errors(result.diagnostics)
        return {"ok": ok, "diagnostics": [d.to_dict() for d in result.diagnostics]}

    @app.post("/api/explain")
    def explain_endpoint(body: DescriptorIn):
        result = analyze(body.descriptor, taxonomy)
        if result.descriptor is None or has_errors(result.diagnostics):
            return _api_error(400, "invalid-descriptor", "descriptor failed to parse",
                              result.diagnostics)
        entries = explain_descriptor(result.descriptor, taxonomy)
        return {"entries": [e.to_dict() for e in entries],
                "diagnostics": [d.to_dict() for d in result.diagnostics]}

    @app.post("/api/derive-repr")
    def derive_endpoint(body: CodeIn):
        try:
            derived = derive_representation(parse_code(body.code))
        except (MalformedCode, NotAnEmbeddingCode) as exc:
            return _api_error(400, "invalid-code", str(exc))
        record = taxonomy.get(derived)
        return {"code": format_code(derived), "name": record.name if record else None}

    # -- documents and catalog ------------------------------------------------

    @app.post("/api/udm/validate")
    def udm_validate_endpoint(body: dict):
        try:
            doc = udm_from_dict(body)
        except UdmParseError as exc:
            return _api_error(400, "invalid-document", str(exc))
        diagnostics = validate_udm(doc, taxonomy)
        return {"ok": not has_errors(diagnostics),
                "diagnostics": [d.to_dict() for d in diagnostics]}

    @app.get("/api/catalog")
    def catalog_list(prefix: str | None = None):
        if prefix is None:
            entries = catalog.list_entries()
        else:
            try:
                code = parse_code(prefix)
            except MalformedCode as exc:
                return _api_error(400, "malformed-code", str(exc))
            entries = catalog.find_by_prefix(code)
        return {"entries": [e.to_dict() for e in entries]}

    @app.post("/api/catalog")
    def catalog_add(body: dict):
        try:
            doc = udm_from_dict(body)
        except UdmParseError as exc:
            return _api_error(400, "invalid-document", str(exc))
        diagnostics = validate_udm(doc, taxonomy)
        if has_errors(diagnostics):
            return _api_error(400, "invalid-document", "document failed validation", diagnostics)
        with writer_lock:
            entry, duplicates = catalog.add(doc)
            _persist()
        return {"entry": entry.to_dict(), "duplicates": duplicates}

    @app.get("/api/catalog/dupes")
    def catalog_dupes():
        return {"groups": catalog.find_duplicates()}

    @app.get("/api/catalog/{entry_id}")
    def catalog_get(entry_id: str):
        try:
            return {"entry": catalog.get(entry_id).to_dict()}
        except EntryNotFound as exc:
            return _api_error(404, "entry-not-found", str(exc))

    @app.delete("/api/catalog/{entry_id}")
    def catalog_delete(entry_id: str):
        with writer_lock:
            try:
                entry = catalog.remove(entry_id)
            except EntryNotFound as exc:
                return _api_error(404, "entry-not-found", str(exc))
            _persist()
        return {"removed": entry.to_dict()}

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def serve(
    addr: str | None = None,
    taxonomy_path: str | None = None,
    store_path: str | None = None,
    ui_dir: str | None = None,
) -> None:
    """Run the API server until interrupted."""
    import uvicorn

    addr = addr or os.environ.get("STEGOTAX_ADDR") or DEFAULT_ADDR
    taxonomy_path = taxonomy_path or os.environ.get("STEGOTAX_TAXONOMY")
    store_path = store_path or os.environ.get("STEGOTAX_STORE")
    ui_dir = ui_dir or os.environ.get("STEGOTAX_UI")
    if ui_dir is None and Path("frontend/dist").is_dir():
        ui_dir = "frontend/dist"

    taxonomy = load_taxonomy_file(taxonomy_path) if taxonomy_path else load_seed_taxonomy()
    host, _, port_text = addr.partition(":")
    app = create_app(taxonomy=taxonomy, store_path=store_path, ui_dir=ui_dir)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port_text or 8765), log_level="info")
