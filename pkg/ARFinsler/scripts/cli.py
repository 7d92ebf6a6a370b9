#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
cli.py - the ``arfinsler`` command

    arfinsler analyze --spec samples/cubic_root.spec
    arfinsler tensor --spec samples/kropina.spec --object G
    arfinsler verify --catalog --json report.json
    arfinsler oracle --spec samples/randers.spec --points 4 --precision 60

Exit codes: 0 success, 1 a claim fails, 2 the input is invalid,
3 an internal inconsistency was detected.
"""
# --- standard Python modules ---
import argparse
import json
import sys
import typing as t

# --- this application's modules ---
from ..core.geometry.Pipeline import WEYL_VARIANTS, weyl_variant
from ..core.geometry.Session import OBJECTS
from ..core.io.ARExceptions import InternalInconsistency
from ..core.io.SpecFile import parse_metric_file
from ..core.utils.notes import update_log_level
from ..infos import __version__
from .Analysis import Analysis, catalog_entry

# ------------------------------------------------------------------------------

EXIT_OK = 0
EXIT_CLAIM = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

LOG_LEVELS = ("silence", "default", "debug", "info", "warning", "error", "critical")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arfinsler",
        description="Exact symbolic analysis of almost rational Finsler metrics.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument("--spec", help="metric definition file")
    source.add_argument(
        "--catalog",
        nargs="?",
        const="all",
        metavar="NAME",
        help="built-in catalog metric NAME, or every catalog metric",
    )
    common.add_argument("--json", metavar="PATH", help="also write the JSON report to PATH ('-' for stdout)")
    common.add_argument(
        "--weyl", type=weyl_variant, choices=WEYL_VARIANTS, default=None, help="Weyl tensor variant (default paper)"
    )
    common.add_argument("--points", type=int, default=None, help="oracle points")
    common.add_argument("--precision", type=int, default=None, help="oracle precision in digits")
    common.add_argument("--seed", type=int, default=None, help="sampling seed")
    common.add_argument("--tolerance", default=None, help="oracle relative tolerance")
    common.add_argument("--log-level", choices=LOG_LEVELS, default=None)
    common.add_argument("--timing", action="store_true", help="include stage timings in the JSON report")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="full report")
    tensor = sub.add_parser("tensor", parents=[common], help="print one object")
    tensor.add_argument("--object", required=True, choices=OBJECTS)
    sub.add_parser("verify", parents=[common], help="exit 0 iff every applicable claim holds")
    sub.add_parser("oracle", parents=[common], help="numeric cross-check")
    return parser


def _read_spec(path: str):
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    return parse_metric_file(text)


def _write_json(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def _run(args) -> int:
    analysis = Analysis(
        weyl=args.weyl,
        points=args.points,
        precision=args.precision,
        seed=args.seed,
        tolerance=args.tolerance,
    )
    if args.catalog is not None:
        if args.command == "tensor":
            if args.catalog == "all":
                raise ValueError("tensor needs one metric: --catalog NAME")
            sources = [catalog_entry(args.catalog)]
        elif args.catalog == "all":
            sources = None
        else:
            sources = [catalog_entry(args.catalog)]
    else:
        sources = [_read_spec(args.spec)]

    if args.command == "tensor":
        entries = analysis.run_tensor(sources[0], args.object)
        if args.json:
            _write_json(args.json, json.dumps({args.object: entries}, sort_keys=True, indent=2) + "\n")
        if args.json != "-":
            for idx, value in entries.items():
                print(f"{args.object}[{idx}] = {value}")
            if not entries:
                print(f"{args.object} = 0")
        return EXIT_OK

    oracle = args.command == "oracle"
    if sources is None:
        report, code = analysis.run_catalog(oracle=oracle)
    else:
        single = analysis.run_analysis(sources[0], oracle=oracle)
        report, code = single, EXIT_OK if single.ok else EXIT_CLAIM
    if args.command == "analyze":
        # analyze reports, only verify and oracle judge
        code = EXIT_OK
    if args.json:
        _write_json(args.json, report.to_json(include_timing=args.timing))
    if args.json != "-":
        if sys.stdout.isatty():
            report.print()
        else:
            sys.stdout.write(report.to_text())
    if code != EXIT_OK:
        for failure in report.failures:
            print(f"FAIL {failure}", file=sys.stderr)
    return code


def main(argv: t.Optional[t.Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level is not None:
        update_log_level(args.log_level)
    try:
        return _run(args)
    except InternalInconsistency as error:
        print(f"internal inconsistency: {error}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ArithmeticError, OSError) as error:
        stage = getattr(error, "stage", None)
        where = f" [{stage}]" if stage else ""
        print(f"error{where}: {error}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
