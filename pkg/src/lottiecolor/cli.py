"""Command line front door.

Subcommands: analyze, extract-theme, palette, list-elements, recolor, serve.
Stdout carries data only; diagnostics go to stderr as single-line JSON
records. Exit codes: 0 success, 1 parse/IO errors, 2 domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .colorspace import Rgba
from .elements import build_element_list
from .errors import (
    LottieColorError,
    MalformedJson,
    OutOfBounds,
    UnsupportedDocument,
)
from .lottie import parse_document, serialize_document
from .occurrences import extract_occurrences, proportion
from .palette import build_palette, palette_to_json, palette_to_svg, rezoom
from .recolor import HslShift, apply_group_shift, apply_set_rgb, group_auto
from .service import DEFAULT_TTL, ServiceConfig, create_app
from .theme import DEFAULT_SIMILARITY_THRESHOLD, ThemeConfig, extract_theme

__all__ = ["run", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports errors through the CLI's own channel."""

    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="lottiecolor",
        description="Analyze and recolor Lottie animations from the command line.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add_input(p):
        p.add_argument("input", help="Lottie JSON file, or - for stdin")

    def add_output(p):
        p.add_argument(
            "-o", "--output", default=None, help="output file (default stdout)"
        )

    p = sub.add_parser("analyze", help="list every color occurrence")
    add_input(p)
    add_output(p)

    p = sub.add_parser("extract-theme", help="dominant colors via clustering")
    add_input(p)
    add_output(p)
    p.add_argument("--k", type=int, default=5, help="number of theme colors")
    p.add_argument("--seed", type=int, default=42, help="clustering seed")

    p = sub.add_parser("palette", help="per-column scene palette")
    add_input(p)
    add_output(p)
    p.add_argument("--step", type=float, default=None, help="frames per column")
    p.add_argument("--zoom", type=float, default=None, help="zoom percent 0-100")
    p.add_argument("--format", choices=("json", "svg"), default="json")

    p = sub.add_parser("list-elements", help="element tree with color bubbles")
    add_input(p)
    add_output(p)

    p = sub.add_parser("recolor", help="shift a color group or replace one color")
    add_input(p)
    add_output(p)
    p.add_argument("--match", default=None, help="theme hex to auto-group around")
    p.add_argument(
        "--threshold",
        type=float,
        default=DEFAULT_SIMILARITY_THRESHOLD,
        help="DeltaE grouping radius for --match",
    )
    p.add_argument("--hue", type=float, default=None, help="hue shift in degrees")
    p.add_argument("--sat", type=float, default=None, help="saturation shift")
    p.add_argument("--light", type=float, default=None, help="lightness shift")
    p.add_argument("--from", dest="from_color", default=None, help="exact hex to replace")
    p.add_argument("--to", dest="to_color", default=None, help="replacement hex")

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8600)
    p.add_argument("--ttl", type=float, default=DEFAULT_TTL, help="session TTL seconds")
    p.add_argument("--persist-dir", default=None, help="session persistence directory")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--threshold", type=float, default=DEFAULT_SIMILARITY_THRESHOLD)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--with-ui", dest="ui_dir", default=None, help="static UI bundle dir")

    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(text: str, output, stdout):
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        stdout.write(text)


def _emit_json(data, output, stdout):
    _emit(json.dumps(data, indent=2) + "\n", output, stdout)


def _hex_arg(value: str, flag: str) -> Rgba:
    try:
        return Rgba.from_hex(value)
    except ValueError as exc:
        raise _UsageError(f"{flag}: {exc}") from exc


def _cmd_analyze(args, stdout) -> int:
    doc = parse_document(_read_input(args.input))
    occ = extract_occurrences(doc)
    shares = {o.color: proportion(occ, o.color) for o in occ.occurrences}
    records = []
    for o in occ.occurrences:
        record = o.to_json()
        record["proportion"] = shares[o.color]
        records.append(record)
    _emit_json(
        {
            "frame_rate": doc.frame_rate,
            "in_point": doc.in_point,
            "out_point": doc.out_point,
            "total_weight": occ.total_weight,
            "occurrences": records,
            "warnings": occ.warnings,
        },
        args.output,
        stdout,
    )
    return EXIT_OK


def _cmd_extract_theme(args, stdout) -> int:
    doc = parse_document(_read_input(args.input))
    occ = extract_occurrences(doc)
    swatches = extract_theme(occ, ThemeConfig(k=args.k, seed=args.seed))
    _emit_json(
        {"k": args.k, "seed": args.seed, "swatches": [s.to_json() for s in swatches]},
        args.output,
        stdout,
    )
    return EXIT_OK


def _cmd_palette(args, stdout) -> int:
    doc = parse_document(_read_input(args.input))
    occ = extract_occurrences(doc)
    bounds = (doc.in_point, doc.out_point, doc.frame_rate)
    try:
        palette = build_palette(occ, bounds, step=args.step)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.zoom is not None:
        try:
            palette = rezoom(palette, args.zoom)
        except OutOfBounds as exc:
            raise _UsageError(str(exc)) from exc
    if args.format == "svg":
        _emit(palette_to_svg(palette), args.output, stdout)
    else:
        _emit_json(palette_to_json(palette), args.output, stdout)
    return EXIT_OK


def _cmd_list_elements(args, stdout) -> int:
    doc = parse_document(_read_input(args.input))
    occ = extract_occurrences(doc)
    entries = build_element_list(doc, occ)
    _emit_json([e.to_json() for e in entries], args.output, stdout)
    return EXIT_OK


def _cmd_recolor(args, stdout) -> int:
    shift_flags = [
        ("hue", args.hue),
        ("saturation", args.sat),
        ("lightness", args.light),
    ]
    shifts = [(c, d) for c, d in shift_flags if d is not None]
    group_mode = args.match is not None
    set_mode = args.from_color is not None or args.to_color is not None
    if group_mode == set_mode:
        raise _UsageError(
            "recolor needs either --match with one shift flag, or --from/--to"
        )
    if group_mode and len(shifts) != 1:
        raise _UsageError("--match needs exactly one of --hue/--sat/--light")
    if set_mode and (shifts or not (args.from_color and args.to_color)):
        raise _UsageError("--from/--to must both be given, without shift flags")

    doc = parse_document(_read_input(args.input))
    if group_mode:
        theme = _hex_arg(args.match, "--match")
        if args.threshold < 0:
            raise _UsageError("--threshold must be >= 0")
        occ = extract_occurrences(doc)
        group = group_auto(theme, occ, args.threshold)
        channel, delta = shifts[0]
        new_doc, _, _ = apply_group_shift(doc, group, HslShift(channel, delta))
    else:
        old = _hex_arg(args.from_color, "--from")
        new = _hex_arg(args.to_color, "--to")
        new_doc, _ = apply_set_rgb(doc, old, new)
    _emit(serialize_document(new_doc) + "\n", args.output, stdout)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    config = ServiceConfig(
        ttl=args.ttl,
        persist_dir=args.persist_dir,
        k=args.k,
        seed=args.seed,
        threshold=args.threshold,
        step=args.step,
        ui_dir=args.ui_dir,
    )
    uvicorn.run(create_app(config), host=args.host, port=args.port)
    return EXIT_OK


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse argv, execute, return the exit code. Streams default to sys.*."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()

    def report(code: str, message: str):
        stderr.write(json.dumps({"error": code, "message": message}) + "\n")

    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        report("usage", str(exc))
        return EXIT_USAGE

    if args.command is None:
        parser.print_help(stderr)
        return EXIT_USAGE

    try:
        if args.command == "analyze":
            return _cmd_analyze(args, stdout)
        if args.command == "extract-theme":
            return _cmd_extract_theme(args, stdout)
        if args.command == "palette":
            return _cmd_palette(args, stdout)
        if args.command == "list-elements":
            return _cmd_list_elements(args, stdout)
        if args.command == "recolor":
            return _cmd_recolor(args, stdout)
        if args.command == "serve":
            return _cmd_serve(args)
        report("usage", f"unknown command {args.command}")
        return EXIT_USAGE
    except _UsageError as exc:
        report("usage", str(exc))
        return EXIT_USAGE
    except (MalformedJson, UnsupportedDocument) as exc:
        report(exc.code, str(exc))
        return EXIT_USAGE
    except LottieColorError as exc:
        report(exc.code, str(exc))
        return EXIT_DOMAIN
    except OSError as exc:
        report("io", str(exc))
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
