"""Command-line entry point: ``qm3 verify | table | report``."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import checks, report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def cmd_verify(args) -> int:
    selector = args.suite or args.selector
    try:
        selected = checks.select(selector)
    except KeyError:
        print(f"unknown suite {selector!r}; choose from all, {', '.join(checks.SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    failed = 0
    with _output(args.out) as out:
        for c in selected:
            r = checks.run_check(c)
            failed += r.status != "pass"
            if args.format == "json":
                out.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
            else:
                out.write(f"{r.status.upper():4}  {r.name:32} {r.elapsed:6.2f}s  {r.detail}\n")
            out.flush()
        if args.format == "text":
            out.write(f"{len(selected) - failed}/{len(selected)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_table(args) -> int:
    with _output(args.out) as out:
        out.write(report.render_table(args.name, args.format) + "\n")
    return EXIT_OK


def cmd_report(args) -> int:
    with _output(args.out) as out:
        out.write(report.build_report())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qm3", description="Exact computations on the reduced quantum plane.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("selector", nargs="?", default="all", help="all, " + ", ".join(checks.SUITES))
    v.add_argument("--suite", help="same as the positional selector")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print a computed table")
    t.add_argument("name", choices=report.TABLES)
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("report", help="write the markdown report")
    r.add_argument("--out")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
