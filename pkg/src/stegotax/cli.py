"""Command-line front end.

Exit codes: 0 on success, 1 when the input fails validation (or a
referenced code/entry does not exist), 2 for usage or I/O errors. With
``--format json`` every subcommand writes structured output to stdout;
in text mode diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from typing import Callable

from . import catalog as catalog_mod
from . import udm as udm_mod
from .codes import MalformedCode, NotAnEmbeddingCode, derive_representation, format_code, parse_code
from .descriptor import (
    analyze,
    descriptor_to_dict,
    diff as diff_descriptors,
    directness_value,
    explain as explain_descriptor,
    locality_value,
    render_canonical,
    render_clauses,
)
from .diagnostics import Diagnostic, errors_only, has_errors
from .errors import StegotaxError
from .taxonomy import (
    PatternNotFound,
    Taxonomy,
    TaxonomyError,
    children,
    load_seed_taxonomy,
    load_taxonomy_file,
    lookup,
)
from .vocab import display_token

DEFAULT_STORE = "stegotax-store"


class _UsageError(Exception):
    pass


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    parser.add_argument("--taxonomy", metavar="PATH",
                        help="taxonomy file overriding the bundled seed")
    parser.add_argument("--store", metavar="PATH",
                        help=f"catalog store directory (default: ./{DEFAULT_STORE})")
    parser.add_argument("--quiet", action="store_true", help="suppress warnings on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stegotax",
        description="Parse, canonicalize, validate, and catalog hiding-method descriptors.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _common_flags(p)
        return p

    p = cmd("parse", "parse a descriptor and print its components")
    p.add_argument("text", nargs="?", help="descriptor string ('-' or omitted: read stdin)")
    p = cmd("normalize", "print the canonical form of a descriptor")
    p.add_argument("text", nargs="?")
    p = cmd("validate", "check a descriptor and report diagnostics")
    p.add_argument("text", nargs="?")
    p = cmd("explain", "explain every non-default component of a descriptor")
    p.add_argument("text", nargs="?")
    p = cmd("derive-repr", "derive the representation counterpart of an embedding code")
    p.add_argument("code", nargs="?", help="pattern code such as E1n1.")
    p = cmd("diff", "compare two descriptors component by component")
    p.add_argument("left")
    p.add_argument("right")

    udm = sub.add_parser("udm", help="work with method-description documents")
    udm_sub = udm.add_subparsers(dest="udm_command", metavar="ACTION")
    _common_flags(udm)
    p = udm_sub.add_parser("new", help="print an empty document template")
    _common_flags(p)
    p = udm_sub.add_parser("validate", help="validate a document file")
    _common_flags(p)
    p.add_argument("file", nargs="?", help="document path ('-' or omitted: read stdin)")
    p = udm_sub.add_parser("render", help="render a document as readable text")
    _common_flags(p)
    p.add_argument("file", nargs="?")

    cat = sub.add_parser("catalog", help="manage the method catalog")
    cat_sub = cat.add_subparsers(dest="catalog_command", metavar="ACTION")
    _common_flags(cat)
    p = cat_sub.add_parser("add", help="add document files to the catalog")
    _common_flags(p)
    p.add_argument("files", nargs="+", metavar="FILE")
    p = cat_sub.add_parser("find", help="find entries by pattern-code prefix")
    _common_flags(p)
    p.add_argument("code")
    p = cat_sub.add_parser("dupes", help="list groups of entries sharing a signature")
    _common_flags(p)
    p = cat_sub.add_parser("list", help="list all entries")
    _common_flags(p)
    p = cat_sub.add_parser("rm", help="remove an entry by id")
    _common_flags(p)
    p.add_argument("id")

    tax = sub.add_parser("taxonomy", help="inspect the pattern taxonomy")
    tax_sub = tax.add_subparsers(dest="taxonomy_command", metavar="ACTION")
    _common_flags(tax)
    p = tax_sub.add_parser("show", help="show one record, or all records")
    _common_flags(p)
    p.add_argument("code", nargs="?")
    p = tax_sub.add_parser("children", help="list all records below a code")
    _common_flags(p)
    p.add_argument("code")

    p = cmd("serve", "run the HTTP API and web UI")
    p.add_argument("--addr", metavar="HOST:PORT", help="bind address (default: env STEGOTAX_ADDR or 127.0.0.1:8765)")
    p.add_argument("--ui-dir", metavar="PATH", help="directory with built web UI assets")

    return parser


# --------------------------------------------------------------------------
# Helpers


def _load_tax(args) -> Taxonomy:
    if args.taxonomy:
        return load_taxonomy_file(args.taxonomy)
    return load_seed_taxonomy()


def _input_text(value: str | None, stdin: Callable[[], str], what: str) -> str:
    text = stdin() if value is None or value == "-" else value
    if not text or not text.strip():
        raise _UsageError(f"empty {what}; pass it as an argument or on stdin")
    return text.strip()


def _read_file(path: str | None, stdin: Callable[[], str]) -> str:
    if path is None or path == "-":
        content = stdin()
        if not content.strip():
            raise _UsageError("empty document input")
        return content
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _report(diagnostics: list[Diagnostic], args) -> None:
    """Text-mode diagnostic reporting on stderr (warnings honor --quiet)."""
    if args.format == "json":
        return
    for diag in diagnostics:
        if args.quiet and not diag.is_error:
            continue
        print(str(diag), file=sys.stderr)


def _diag_dicts(diagnostics: list[Diagnostic]) -> list[dict]:
    return [d.to_dict() for d in diagnostics]


def _open_catalog(args, taxonomy: Taxonomy) -> tuple[catalog_mod.Catalog, Path]:
    store = args.store or os.environ.get("STEGOTAX_STORE") or DEFAULT_STORE
    path = Path(store)
    return catalog_mod.Catalog.open(path, taxonomy), path


# --------------------------------------------------------------------------
# Subcommand handlers


def _cmd_parse(args, stdin) -> int:
    taxonomy = _load_tax(args)
    text = _input_text(args.text, stdin, "descriptor")
    result = analyze(text, taxonomy)
    _report(result.diagnostics, args)
    failed = result.descriptor is None or has_errors(result.diagnostics)
    if args.format == "json":
        _emit_json({
            "descriptor": descriptor_to_dict(result.descriptor) if result.descriptor else None,
            "canonical": None if failed else render_canonical(result.descriptor, taxonomy),
            "diagnostics": _diag_dicts(result.diagnostics),
        })
        return 1 if failed else 0
    if failed:
        return 1
    d = result.descriptor
    print(f"locality: {locality_value(d.locality)}")
    print(f"directness: {directness_value(d.directness)}")
    print(f"activeness: {display_token(d.activeness.value)}")
    print(f"level: {display_token(d.level.value)}")
    print(f"temporality: {display_token(d.temporality.value)}")
    stars = " ".join(f"[{p.text}]" for p in d.star_properties) or "(none)"
    print(f"star-properties: {stars}")
    print(f"patterns: {render_clauses(d.patterns)}")
    print(f"canonical: {render_canonical(d, taxonomy)}")
    return 0


def _cmd_normalize(args, stdin) -> int:
    taxonomy = _load_tax(args)
    text = _input_text(args.text, stdin, "descriptor")
    result = analyze(text, taxonomy)
    _report(result.diagnostics, args)
    failed = result.descriptor is None or has_errors(result.diagnostics)
    canonical = None if failed else render_canonical(result.descriptor, taxonomy)
    if args.format == "json":
        _emit_json({"canonical": canonical, "diagnostics": _diag_dicts(result.diagnostics)})
    elif canonical is not None:
        print(canonical)
    return 1 if failed else 0


def _cmd_validate(args, stdin) -> int:
    taxonomy = _load_tax(args)
    text = _input_text(args.text, stdin, "descriptor")
    result = analyze(text, taxonomy)
    _report(result.diagnostics, args)
    ok = not has_errors(result.diagnostics) and result.descriptor is not None
    if args.format == "json":
        _emit_json({"ok": ok, "diagnostics": _diag_dicts(result.diagnostics)})
    else:
        errors = len(errors_only(result.diagnostics))
        warnings = len(result.diagnostics) - errors
        print("ok" if ok else f"{errors} error(s), {warnings} warning(s)")
    return 0 if ok else 1


def _cmd_explain(args, stdin) -> int:
    taxonomy = _load_tax(args)
    text = _input_text(args.text, stdin, "descriptor")
    result = analyze(text, taxonomy)
    _report(result.diagnostics, args)
    if result.descriptor is None or has_errors(result.diagnostics):
        if args.format == "json":
            _emit_json({"entries": None, "diagnostics": _diag_dicts(result.diagnostics)})
        return 1
    entries = explain_descriptor(result.descriptor, taxonomy)
    if args.format == "json":
        _emit_json({"entries": [e.to_dict() for e in entries],
                    "diagnostics": _diag_dicts(result.diagnostics)})
    else:
        for entry in entries:
            print(f"{entry.component}: {entry.value}")
            print(f"    {entry.description}")
    return 0


def _cmd_derive_repr(args, stdin) -> int:
    taxonomy = _load_tax(args)
    text = _input_text(args.code, stdin, "pattern code")
    try:
        derived = derive_representation(parse_code(text))
    except (MalformedCode, NotAnEmbeddingCode) as exc:
        if args.format == "json":
            _emit_json({"code": None, "error": str(exc)})
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    record = taxonomy.get(derived)
    if args.format == "json":
        _emit_json({"code": format_code(derived), "name": record.name if record else None})
    else:
        suffix = f" {record.name}" if record else ""
        print(f"{format_code(derived)}{suffix}")
    return 0


def _cmd_diff(args, stdin) -> int:
    taxonomy = _load_tax(args)
    sides = []
    for raw in (args.left, args.right):
        text = _input_text(raw, stdin, "descriptor")
        result = analyze(text, taxonomy)
        _report(result.diagnostics, args)
        if result.descriptor is None or has_errors(result.diagnostics):
            if args.format == "json":
                _emit_json({"differences": None, "diagnostics": _diag_dicts(result.diagnostics)})
            return 1
        sides.append(result.descriptor)
    differences = diff_descriptors(sides[0], sides[1])
    if args.format == "json":
        _emit_json({"differences": [d.to_dict() for d in differences]})
    else:
        for d in differences:
            print(f"{d.component}: {d.left} vs {d.right}")
    return 0


def _cmd_udm(args, stdin) -> int:
    action = args.udm_command
    if action is None:
        raise _UsageError("udm requires an action: new, validate, or render")
    if action == "new":
        _emit_json(udm_mod.new_udm_template())
        return 0
    taxonomy = _load_tax(args)
    content = _read_file(args.file, stdin)
    try:
        doc = udm_mod.deserialize_udm(content)
    except udm_mod.UdmParseError as exc:
        if args.format == "json":
            _emit_json({"ok": False, "error": str(exc)})
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if action == "validate":
        diagnostics = udm_mod.validate_udm(doc, taxonomy)
        _report(diagnostics, args)
        ok = not has_errors(diagnostics)
        if args.format == "json":
            _emit_json({"ok": ok, "diagnostics": _diag_dicts(diagnostics)})
        else:
            print("ok" if ok else f"{len(errors_only(diagnostics))} error(s)")
        return 0 if ok else 1
    if action == "render":
        if args.format == "json":
            _emit_json(udm_mod.udm_to_dict(doc))
        else:
            print(udm_mod.render_udm_text(doc), end="")
        return 0
    raise _UsageError(f"unknown udm action {action!r}")


def _cmd_catalog(args, stdin) -> int:
    action = args.catalog_command
    if action is None:
        raise _UsageError("catalog requires an action: add, find, dupes, list, or rm")
    taxonomy = _load_tax(args)
    catalog, store_path = _open_catalog(args, taxonomy)

    if action == "add":
        added = []
        for path in args.files:
            content = _read_file(path, stdin)
            doc = udm_mod.deserialize_udm(content)
            entry, duplicates = catalog.add(doc)
            added.append((entry, duplicates))
        catalog.persist(store_path)
        if args.format == "json":
            _emit_json({"added": [
                {"entry": entry.to_dict(), "duplicates": duplicates}
                for entry, duplicates in added
            ]})
        else:
            for entry, duplicates in added:
                print(entry.id)
                if duplicates and not args.quiet:
                    ids = ", ".join(duplicates)
                    print(f"warning: same signature as existing entries: {ids}", file=sys.stderr)
        return 0

    if action == "find":
        code = parse_code(args.code)
        entries = catalog.find_by_prefix(code)
        if args.format == "json":
            _emit_json({"entries": [e.to_dict() for e in entries]})
        else:
            for entry in entries:
                print(f"{entry.id}  {entry.document.method_name}")
        return 0

    if action == "dupes":
        groups = catalog.find_duplicates()
        if args.format == "json":
            _emit_json({"groups": groups})
        else:
            for group in groups:
                print(" ".join(group))
        return 0

    if action == "list":
        entries = catalog.list_entries()
        if args.format == "json":
            _emit_json({"entries": [e.to_dict() for e in entries]})
        else:
            for entry in entries:
                print(f"{entry.id}  {entry.document.method_name}")
        return 0

    if action == "rm":
        entry = catalog.remove(args.id)
        catalog.persist(store_path)
        if args.format == "json":
            _emit_json({"removed": entry.to_dict()})
        else:
            print(entry.id)
        return 0

    raise _UsageError(f"unknown catalog action {action!r}")


def _cmd_taxonomy(args, stdin) -> int:
    action = args.taxonomy_command
    if action is None:
        raise _UsageError("taxonomy requires an action: show or children")
    taxonomy = _load_tax(args)

    def record_dict(record) -> dict:
        return {
            "code": record.code_text,
            "name": record.name,
            "description": record.description,
            "parent": format_code(record.parent) if record.parent else None,
            "domain": record.domain_label,
        }

    if action == "show" and args.code is None:
        records = taxonomy.records()
        if args.format == "json":
            _emit_json({"version": taxonomy.version, "patterns": [record_dict(r) for r in records]})
        else:
            for record in records:
                print(f"{record.code_text}  {record.name} ({record.domain_label})")
        return 0

    code = parse_code(args.code)
    if action == "show":
        record = lookup(taxonomy, code)
        if args.format == "json":
            _emit_json(record_dict(record))
        else:
            print(f"code: {record.code_text}")
            print(f"name: {record.name}")
            print(f"domain: {record.domain_label}")
            print(f"parent: {format_code(record.parent) if record.parent else '(none)'}")
            print(f"description: {record.description}")
        return 0
    if action == "children":
        records = children(taxonomy, code)
        if args.format == "json":
            _emit_json({"children": [record_dict(r) for r in records]})
        else:
            for record in records:
                print(f"{record.code_text}  {record.name} ({record.domain_label})")
        return 0
    raise _UsageError(f"unknown taxonomy action {action!r}")


def _cmd_serve(args, stdin) -> int:
    from .service import serve

    serve(addr=args.addr, taxonomy_path=args.taxonomy, store_path=args.store, ui_dir=args.ui_dir)
    return 0


_HANDLERS = {
    "parse": _cmd_parse,
    "normalize": _cmd_normalize,
    "validate": _cmd_validate,
    "explain": _cmd_explain,
    "derive-repr": _cmd_derive_repr,
    "diff": _cmd_diff,
    "udm": _cmd_udm,
    "catalog": _cmd_catalog,
    "taxonomy": _cmd_taxonomy,
    "serve": _cmd_serve,
}


def _dispatch(argv: list[str], stdin: Callable[[], str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args, stdin)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (udm_mod.UdmParseError, MalformedCode, NotAnEmbeddingCode,
            PatternNotFound, catalog_mod.EntryNotFound, udm_mod.ValidationFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TaxonomyError, catalog_mod.StorageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StegotaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run(argv: list[str], stdin_text: str = "") -> tuple[int, str, str]:
    """Run a command with captured output; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = _dispatch(list(argv), lambda: stdin_text)
        except SystemExit as exc:
            code = int(exc.code) if isinstance(exc.code, int) else 2
    return code, out.getvalue(), err.getvalue()


def main() -> None:
    try:
        code = _dispatch(sys.argv[1:], lambda: sys.stdin.read())
    except SystemExit as exc:
        code = int(exc.code) if isinstance(exc.code, int) else 2
    raise SystemExit(code)
