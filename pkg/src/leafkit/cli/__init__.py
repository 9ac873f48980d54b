"""Command-line driver: ``leafkit SCRIPT`` or ``python -m leafkit SCRIPT``."""

from __future__ import annotations

import argparse
import json
import sys

from ..errors import PolySyntaxError
from .parser import Script, parse
from .runner import Config, Result, run

EXIT_OK, EXIT_FAILED, EXIT_SYNTAX = 0, 1, 2


def format_report(results, certificates: bool = False) -> str:
    lines = []
    for r in results:
        lines.append(r.text())
        lines.extend(f"  {d}" for d in r.details)
        if certificates:
            lines.extend(f"    {p}" for p in r.proof)
    return "".join(line + "\n" for line in lines)


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leafkit", description="Run a leafkit script and print one line per result.")
    ap.add_argument("script", nargs="?", default="-", help="script file, or - for stdin (default)")
    ap.add_argument("--json", action="store_true", help="print the report as JSON")
    ap.add_argument("--deg", type=int, default=None, help="default degree bound for trajectories")
    ap.add_argument("--rounds", type=int, default=None, help="default round limit for trajectories")
    ap.add_argument("--jet-order", type=int, default=None, help="default jet order for identity checks")
    ap.add_argument("--certificates", action="store_true", help="print full cofactor certificates")
    return ap


def main(argv=None, stdout=None) -> int:
    args = build_arg_parser().parse_args(argv)
    out = stdout or sys.stdout
    if args.script == "-":
        source = sys.stdin.read()
    else:
        with open(args.script, encoding="utf-8") as fh:
            source = fh.read()
    try:
        script = parse(source)
    except PolySyntaxError as e:
        if args.json:
            err = {"line": e.line, "column": e.column, "expected": list(e.expected), "message": str(e)}
            out.write(json.dumps({"exit_code": EXIT_SYNTAX, "syntax_error": err}, indent=2) + "\n")
        else:
            print(f"syntax error: {e}", file=sys.stderr)
        return EXIT_SYNTAX
    config = Config(deg=args.deg, jet_order=args.jet_order)
    if args.rounds is not None:
        config.rounds = args.rounds
    results, code = run(script, config)
    if args.json:
        doc = {"exit_code": code, "results": [r.as_dict() for r in results]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(format_report(results, args.certificates))
    return code


__all__ = ["Config", "Result", "Script", "format_report", "main", "parse", "run"]
