"""Command-line front end.

Four commands: analyze (parse native configs, print metrics and optional
graph exports), generate (write the bundled topologies' native configs),
compare (merge stored metric rows into one table), and reproduce (rebuild
all six bundled topologies and check every metric cell against the recorded
reference values).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import NetComplexityError, ParseError, ReportError
from .metrics import compute_metrics
from .parsers import DIALECTS, load_files
from .reference import DISPLAY_NAMES, check_row
from .report import (
    as_table_row,
    export_dot,
    export_graphml,
    read_rows_csv,
    render_comparison,
    summarize_types,
)
from .resources import build_graph
from .taxonomy import Taxonomy
from .topologies import TOPOLOGY_IDS, generate, write_native

_FORMATS = ("csv", "md", "dot", "graphml")
_TABLE_FORMATS = ("csv", "md")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netcomplexity",
        description=(
            "Convert network configurations into typed graphs and report "
            "complexity metrics."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze", help="compute metrics for native configuration files"
    )
    analyze.add_argument("--dialect", required=True, choices=DIALECTS)
    analyze.add_argument(
        "--input", required=True, nargs="+", help="input files or directories"
    )
    analyze.add_argument("--taxonomy", help="taxonomy file replacing the built-in one")
    analyze.add_argument("--out", help="output path (suffixed per format if several)")
    analyze.add_argument(
        "--format",
        action="append",
        choices=_FORMATS,
        help="output format, repeatable (default: md)",
    )

    gen = sub.add_parser(
        "generate", help="write a bundled topology's native configuration"
    )
    gen.add_argument("--topology", required=True, choices=TOPOLOGY_IDS)
    gen.add_argument("--out", default=".", help="output directory (default: .)")

    compare = sub.add_parser("compare", help="merge stored metric rows into one table")
    compare.add_argument(
        "--input", required=True, nargs="+", help="CSV row files from analyze"
    )
    compare.add_argument("--out", help="output path (suffixed per format if several)")
    compare.add_argument(
        "--format",
        action="append",
        choices=_TABLE_FORMATS,
        help="output format, repeatable (default: md)",
    )

    sub.add_parser(
        "reproduce",
        help="rebuild the six bundled topologies and check all metric cells",
    )
    return parser


def _expand_inputs(raw_paths) -> "list[Path]":
    files = []
    for raw in raw_paths:
        path = Path(raw)
        if path.is_dir():
            files.extend(sorted(p for p in path.iterdir() if p.is_file()))
        elif path.is_file():
            files.append(path)
        else:
            raise ParseError(f"input path {path} does not exist")
    if not files:
        raise ParseError(f"no resources found under {', '.join(map(str, raw_paths))}")
    return files


def _dedupe(formats) -> "list[str]":
    seen = []
    for fmt in formats:
        if fmt not in seen:
            seen.append(fmt)
    return seen


def _emit(outputs: "dict[str, str]", out: "str | None") -> None:
    if out is None:
        for text in outputs.values():
            sys.stdout.write(text)
        return
    if len(outputs) == 1:
        Path(out).write_text(next(iter(outputs.values())), encoding="utf-8")
        return
    for fmt, text in outputs.items():
        Path(f"{out}.{fmt}").write_text(text, encoding="utf-8")


def _cmd_analyze(args) -> int:
    files = _expand_inputs(args.input)
    rs = load_files(args.dialect, files)
    if len(rs) == 0:
        raise ParseError("no resources parsed from the given inputs")
    taxonomy = (
        Taxonomy.from_file(args.taxonomy) if args.taxonomy else Taxonomy.default()
    )
    graph = build_graph(rs, taxonomy, name=files[0].stem)
    for warning in [*rs.warnings, *graph.warnings]:
        print(f"warning: {warning}", file=sys.stderr)
    row = compute_metrics(graph)

    outputs = {}
    for fmt in _dedupe(args.format or ["md"]):
        if fmt in _TABLE_FORMATS:
            outputs[fmt] = render_comparison([as_table_row(row)], fmt)
        elif fmt == "dot":
            outputs[fmt] = export_dot(summarize_types(graph))
        else:
            outputs[fmt] = export_graphml(graph)
    _emit(outputs, args.out)
    return 0


def _cmd_generate(args) -> int:
    for path in write_native(args.topology, args.out):
        print(f"wrote {path}", file=sys.stderr)
    return 0


def _cmd_compare(args) -> int:
    rows = []
    for raw in args.input:
        path = Path(raw)
        if not path.is_file():
            raise ReportError(f"row file {path} does not exist")
        rows.extend(read_rows_csv(path.read_text(encoding="utf-8"), source=str(path)))
    outputs = {
        fmt: render_comparison(rows, fmt) for fmt in _dedupe(args.format or ["md"])
    }
    _emit(outputs, args.out)
    return 0


def _cmd_reproduce() -> int:
    taxonomy = Taxonomy.default()
    rows = []
    checks = []
    for tid in TOPOLOGY_IDS:
        graph = build_graph(generate(tid), taxonomy, name=DISPLAY_NAMES[tid])
        row = compute_metrics(graph)
        rows.append(row)
        checks.extend(check_row(tid, row))
    out = [render_comparison(rows, "md")]
    for check in checks:
        out.append(check.render() + "\n")
    passed = sum(1 for c in checks if c.ok)
    out.append(f"cells passed: {passed}/{len(checks)}\n")
    sys.stdout.write("".join(out))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "compare":
            return _cmd_compare(args)
        return _cmd_reproduce()
    except NetComplexityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
