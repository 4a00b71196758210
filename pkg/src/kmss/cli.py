"""Command-line entry point: ``kmss <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import atlas
from .catalog import TABLES
from .involutions import default_window, get_case
from .render import SCHEMA, SchemaError, parse_diagram, render_diagram, vogan_json
from .vogan import VoganError, equivalence_class, reduce_borel_siebenthal

OK, INVALID, UNCLASSIFIED, DISAGREE = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None


def _load(path: str):
    try:
        return parse_diagram(_read(path))
    except SchemaError as e:
        raise UsageError(f"{path}: {e}") from None


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def cmd_list_forms(args) -> int:
    forms = atlas.list_forms(args.series, args.rank)
    _dump({"schema": SCHEMA, "series": args.series, "rank": args.rank, "forms": forms})
    return OK if all(f["row"] for f in forms) else UNCLASSIFIED


def cmd_reduce(args) -> int:
    vd = _load(args.file)
    rep = reduce_borel_siebenthal(vd)
    cls = equivalence_class(vd)
    _dump({"schema": SCHEMA, "input": vd.to_json(), "reduced": rep.to_json(),
           "class_size": len(cls), "painted_count": len(rep.painted)})
    return OK


def cmd_classify(args) -> int:
    cls = atlas.classify(_load(args.file))
    _dump(cls.to_json())
    return OK if cls.classified else UNCLASSIFIED


def cmd_fixed_roots(args) -> int:
    rep = atlas.fixed_roots_report(_load(args.file))
    _dump(rep)
    return OK if rep["classified"] else UNCLASSIFIED


def cmd_verify(args) -> int:
    try:
        case = get_case(args.series, args.rank, args.case)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    out = atlas.crosscheck(case, args.window)
    out["report"] = atlas.verify_case(case, args.window)
    _dump(out)
    return OK if out["agree"] else DISAGREE


def cmd_table(args) -> int:
    key = args.key
    if key not in TABLES:
        raise UsageError(f"unknown table {key!r}; known tables: {', '.join(TABLES)}")
    if args.format == "json":
        _dump(atlas.table_json(key, args.param))
    else:
        sys.stdout.write(atlas.emit_table(key, args.param, args.format))
    return OK


def cmd_render(args) -> int:
    vd = _load(args.file)
    if args.format == "json":
        _dump(vogan_json(vd))
    else:
        sys.stdout.write(render_diagram(vd, args.format))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kmss", description="Real forms of untwisted affine Kac-Moody algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list-forms", help="every reduced Vogan class on a diagram with its label")
    p.add_argument("series", choices=["A", "B", "C", "D"])
    p.add_argument("rank", type=int)
    p.set_defaults(func=cmd_list_forms)

    for name, func, text in (
        ("reduce", cmd_reduce, "canonical representative with at most two painted nodes"),
        ("classify", cmd_classify, "look a Vogan diagram up in the catalog"),
        ("fixed-roots", cmd_fixed_roots, "simple roots of the fixed algebra"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file", help="Vogan JSON file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run a worked involution and cross-check it with the catalog")
    p.add_argument("series", choices=["A", "B", "C", "D"])
    p.add_argument("rank", type=int)
    p.add_argument("--case", required=True, help="case name, e.g. I, II, III")
    p.add_argument("--window", type=int, default=None, help="loop degree window (default KMSS_WINDOW or 4)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="emit a catalog table")
    p.add_argument("key", help=f"one of {', '.join(TABLES)}")
    p.add_argument("--param", type=int, default=None, help="rank parameter n")
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("render", help="draw a Vogan diagram")
    p.add_argument("file", help="Vogan JSON file, or - for stdin")
    p.add_argument("--format", choices=["ascii", "dot", "json"], default="ascii")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if getattr(args, "window", None) is None and args.command == "verify":
            args.window = default_window()
        if getattr(args, "window", None) is not None and args.window < 1:
            raise UsageError("--window must be at least 1")
        return args.func(args)
    except (UsageError, VoganError, ValueError) as e:
        print(f"kmss: error: {e}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
