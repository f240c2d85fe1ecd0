"""Command line entry point.

Exit codes: 0 success, 1 validation failure (including oracle mismatches),
2 parse or usage error.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import get_case, list_cases
from .classify import classify
from .fileformat import ParseError, format_algebra_file, parse_algebra_file
from .hnstruct import check_compatibility, check_quaternionic, standard_structure
from .liealg import LieAlgebra, validate
from .oracle import run_oracles
from .report import build_report, render_text, to_json

EXIT_OK, EXIT_INVALID, EXIT_PARSE = 0, 1, 2


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force sums")
    p.add_argument("--quiet", action="store_true", help="print only the class label")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hnlie",
        description="Classify hypercomplex structures with Hermitian-Norden metrics on 4-dimensional Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="classify an algebra file")
    a.add_argument("path", type=Path)
    c = sub.add_parser("catalog", parents=[common], help="list or analyze built-in cases")
    c.add_argument("name", nargs="?")
    c.add_argument("--all", action="store_true", help="analyze every built-in case")
    e = sub.add_parser("export", help="write a built-in case in the input file format")
    e.add_argument("name")
    e.add_argument("-o", "--output", type=Path)
    return parser


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _analyze(alg: LieAlgebra, g, name: str | None, args) -> tuple[int, str | dict]:
    v = validate(alg)
    if not v.ok:
        for m in v.messages():
            _err(f"{name or 'input'}: {m}")
        return EXIT_INVALID, ""
    H = standard_structure(g)
    bad = check_quaternionic(H.J).failures + check_compatibility(H).failures
    if bad:
        for m in bad:
            _err(f"{name or 'input'}: {m}")
        return EXIT_INVALID, ""
    rep = classify(alg, H)
    orc = run_oracles(alg, H) if args.oracle else None
    code = EXIT_OK
    if orc is not None and not orc.ok:
        failed = [k for k, ok in orc.checks.items() if not ok]
        _err(f"{name or 'input'}: oracle mismatch in {', '.join(failed)}")
        code = EXIT_INVALID
    if args.quiet:
        return code, rep.combined_label.value
    if args.format == "json":
        return code, build_report(rep, name, orc)
    return code, render_text(rep, name, orc)


def _emit(outputs: list, fmt: str) -> None:
    if fmt == "json" and outputs and isinstance(outputs[0], dict):
        print(to_json(outputs[0] if len(outputs) == 1 else outputs))
    else:
        print("\n\n".join(str(o) for o in outputs))


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK

    if args.command == "export":
        try:
            case = get_case(args.name)
        except KeyError as exc:
            _err(str(exc.args[0]))
            return EXIT_PARSE
        text = format_algebra_file(case.algebra, title=f"{case.name}: {case.description}")
        if args.output:
            args.output.write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if args.command == "analyze":
        try:
            parsed = parse_algebra_file(args.path.read_text())
        except OSError as exc:
            _err(f"{args.path}: {exc.strerror or exc}")
            return EXIT_PARSE
        except ParseError as exc:
            _err(f"{args.path}: {exc}")
            return EXIT_PARSE
        try:
            alg = parsed.to_algebra()
        except ValueError as exc:
            _err(f"{args.path}: {exc}")
            return EXIT_PARSE
        code, out = _analyze(alg, parsed.to_metric(), str(args.path), args)
        if out:
            _emit([out], args.format)
        return code

    # catalog
    if args.name is None and not args.all:
        for name, desc in list_cases():
            print(f"{name:6s} {desc}")
        return EXIT_OK
    names = [n for n, _ in list_cases()] if args.all else [args.name]
    outputs, worst = [], EXIT_OK
    for n in names:
        try:
            case = get_case(n)
        except KeyError as exc:
            _err(str(exc.args[0]))
            return EXIT_PARSE
        code, out = _analyze(case.algebra, None, case.name, args)
        worst = max(worst, code)
        if out:
            outputs.append(out)
    _emit(outputs, args.format)
    return worst


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
