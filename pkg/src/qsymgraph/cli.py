"""Command-line interface.

Subcommands:

* ``check``  -- classify a single graph from a file (graph6 or adjacency).
* ``batch``  -- classify an enumerated family (``--n``) or every graph in
  a file, then print/persist an aggregate table.
* ``table``  -- re-aggregate previously stored NDJSON records.

Exit codes: 0 success, 1 malformed input, 2 engine resource cap exceeded
(a partial report is still written).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import ClassifyConfig
from .graphs import GraphError, parse_adjacency, parse_graph6
from .groebner import EngineLimits, ResourceCapError
from .pipeline import (
    FORMATS,
    RunConfig,
    read_records,
    record_for,
    render_table,
    report_from_records,
    run_batch,
)


def _classify_config(args) -> ClassifyConfig:
    return ClassifyConfig(
        fulton_max_power=args.fulton_power,
        fulton_mode=args.fulton_mode,
        gb_degree_cap=args.gb_cap,
        limits=EngineLimits(),
    )


def _add_classify_flags(p: argparse.ArgumentParser):
    p.add_argument("--fulton-power", type=int, default=None, metavar="L",
                   help="walk-count power cap (default: n^2)")
    p.add_argument("--gb-cap", type=int, default=12, metavar="D",
                   help="max Groebner truncation degree (default: 12)")
    p.add_argument("--fulton-mode", choices=("delete", "relations"), default="delete",
                   help="apply forced zeros by deleting generators or by relations")


def _add_output_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=FORMATS, default="text", dest="fmt")
    p.add_argument("--out", type=Path, default=None,
                   help="base path for <out>.ndjson and <out>.summary.<ext>")


def _looks_like_adjacency(text: str) -> bool:
    stripped = text.strip()
    return bool(stripped) and all(c in "01 \t\n\r" for c in stripped)


def _read_single_graph(path: Path):
    text = Path(path).read_text()
    if _looks_like_adjacency(text):
        return parse_adjacency(text)
    for line in text.splitlines():
        if line.strip():
            return parse_graph6(line)
    raise GraphError("no graph found in input")


def cmd_check(args) -> int:
    try:
        g = _read_single_graph(args.input)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        record = record_for(g, _classify_config(args))
    except ResourceCapError as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return 2
    if args.fmt == "text":
        from .fulton import render_pattern, zero_pattern

        print(f"graph6:     {record.graph6}")
        print(f"vertices:   {record.n}")
        print(f"|Aut|:      {record.aut_order}")
        pair = " ".join(record.disjoint_pair) if record.disjoint_pair else "none"
        print(f"disjoint:   {pair}")
        output = "-" if record.qsym_output is None else record.qsym_output
        print(f"qsym:       {output}")
        print(f"verdict:    {record.verdict}")
        print("generators:")
        pattern = zero_pattern(g, args.fulton_power)
        for line in render_pattern(pattern).splitlines():
            print(f"  {line}")
    else:
        print(json.dumps(record.to_json_dict()))
    if args.out is not None:
        Path(str(args.out) + ".ndjson").write_text(
            json.dumps(record.to_json_dict()) + "\n")
    return 0


def cmd_batch(args) -> int:
    cfg = RunConfig(
        n=args.n,
        graph6_path=None if args.input is None or _input_is_adjacency(args.input) else args.input,
        adjacency_path=args.input if args.input is not None and _input_is_adjacency(args.input) else None,
        classify=_classify_config(args),
        jobs=args.jobs,
        fmt=args.fmt,
        out=args.out,
    )
    try:
        report = run_batch(cfg)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(render_table(report, args.fmt))
    for msg in report.input_errors:
        print(f"input error: {msg}", file=sys.stderr)
    for msg in report.cap_failures:
        print(f"resource cap: {msg}", file=sys.stderr)
    if report.cap_failures:
        return 2
    if report.input_errors:
        return 1
    return 0


def _input_is_adjacency(path: Path) -> bool:
    try:
        return _looks_like_adjacency(Path(path).read_text())
    except OSError:
        return False


def cmd_table(args) -> int:
    try:
        records = read_records(args.input)
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = report_from_records(records)
    print(render_table(report, args.fmt))
    if args.out is not None:
        from .pipeline import persist_report

        persist_report(report, args.out, args.fmt)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsymgraph",
        description="Decide whether finite simple graphs have quantum symmetries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="classify a single graph")
    p_check.add_argument("--input", type=Path, required=True,
                         help="file containing one graph6 line or an adjacency matrix")
    _add_classify_flags(p_check)
    _add_output_flags(p_check)
    p_check.set_defaults(func=cmd_check)

    p_batch = sub.add_parser("batch", help="classify a family of graphs")
    src = p_batch.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int, default=None,
                     help="enumerate all connected graphs on n vertices")
    src.add_argument("--input", type=Path, default=None,
                     help="graph6 file (one per line) or adjacency blocks")
    p_batch.add_argument("--jobs", type=int, default=1)
    _add_classify_flags(p_batch)
    _add_output_flags(p_batch)
    p_batch.set_defaults(func=cmd_batch)

    p_table = sub.add_parser("table", help="re-aggregate stored NDJSON records")
    p_table.add_argument("--input", type=Path, required=True)
    _add_output_flags(p_table)
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
