"""Command-line entry point; exit code 0 iff every requested check passes, 2 on usage errors."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .curve import CurveError, class_number, count_points, curve_from_spec, l_polynomial
from .cyclo import verify_norm_cn
from .harness import load_corpus, run_curve_entry, run_curve_suite, run_lemma_suite
from .intpoly import verify_disc_pn
from .reports import CheckReport, dumps
from .torsion import TORSION_SEED

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(reports: list[CheckReport], json_path: str | None, timings: bool, verbose: bool = False) -> int:
    for r in sorted(reports, key=CheckReport.sort_key):
        print(r.line())
        if verbose or not r.passed:
            print(f"  expected: {r.expected}")
            print(f"  actual:   {r.actual}")
    passed = sum(r.passed for r in reports)
    print(f"summary: {passed}/{len(reports)} passed")
    if json_path:
        Path(json_path).write_text(dumps(reports, timings))
    return EXIT_OK if passed == len(reports) else EXIT_FAIL


def _read_entries(path: str) -> list[dict]:
    try:
        return load_corpus(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_lemmas(args) -> int:
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    return _emit(run_lemma_suite(args.max_n), args.json, args.timings)


def cmd_curve_analyze(args) -> int:
    out = []
    for entry in _read_entries(args.spec):
        try:
            C = curve_from_spec(entry)
        except CurveError as exc:
            out.append({"label": entry.get("label", ""), "error": str(exc)})
            continue
        info = C.describe()
        L = l_polynomial(C)
        info["L_polynomial"] = str(L)
        info["points"] = str(count_points(C))
        info["J_order"] = str(class_number(C))
        out.append(info)
    print(json.dumps(out if len(out) != 1 else out[0], indent=2))
    return EXIT_FAIL if any("error" in o for o in out) else EXIT_OK


def cmd_curve_verify(args) -> int:
    reports = []
    for entry in _read_entries(args.spec):
        reports += run_curve_entry(entry, args.seed, args.ell)
    return _emit(reports, args.json, args.timings)


def cmd_curve_suite(args) -> int:
    corpus = None
    if args.corpus:
        corpus = _read_entries(args.corpus)
    return _emit(run_curve_suite(corpus, args.seed), args.json, args.timings)


def cmd_norm_cn(args) -> int:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    return _emit([verify_norm_cn(args.n)], None, False, verbose=True)


def cmd_disc_pn(args) -> int:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    return _emit([verify_disc_pn(args.n)], None, False, verbose=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superjac", description="Exact checks for superelliptic Jacobians.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lemmas", help="cyclotomic and polynomial lemma suite")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json")
    p.add_argument("--timings", action="store_true", help="record runtimeMs in the JSON report")
    p.set_defaults(func=cmd_lemmas)

    curve = sub.add_parser("curve", help="curve commands").add_subparsers(dest="curve_command", required=True)
    p = curve.add_parser("analyze", help="validate a curve and print its canonical form")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_curve_analyze)
    p = curve.add_parser("verify", help="run the Jacobian checks on a curve")
    p.add_argument("--spec", required=True)
    p.add_argument("--ell", type=int, action="append", default=[])
    p.add_argument("--seed", type=int, default=TORSION_SEED)
    p.add_argument("--json")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_curve_verify)
    p = curve.add_parser("suite", help="run the curve corpus (built-in by default)")
    p.add_argument("--corpus")
    p.add_argument("--seed", type=int, default=TORSION_SEED)
    p.add_argument("--json")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_curve_suite)

    cyclo = sub.add_parser("cyclo", help="cyclotomic integers").add_subparsers(dest="cyclo_command", required=True)
    p = cyclo.add_parser("norm-cn", help="|Nm(c_N)| against its closed form")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_norm_cn)

    poly = sub.add_parser("poly", help="integer polynomials").add_subparsers(dest="poly_command", required=True)
    p = poly.add_parser("disc-pn", help="Disc(P_N) against its closed form")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_disc_pn)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
