"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 unsupported family, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Field, as_field
from .combinatorics import Partition, ShapeError, count_syt_hook, enumerate_standard_tableaux
from .groebner import DEFAULT_DEGREE_CAP, DegreeCapExceeded, Ideal, buchberger
from .hilbert import OutOfRange, closed_form, series_of_quotient
from .parsing import PolynomialSyntaxError, infer_nvars, parse_polynomial
from .specht import SpechtIdealSpec, specht_generators, specht_ideal
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FAMILY, EXIT_CAP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _spec(args) -> SpechtIdealSpec:
    if args.lam is None:
        raise UsageError("--lambda is required")
    try:
        return SpechtIdealSpec.of(Partition.parse(args.lam), args.n)
    except ShapeError as exc:
        raise UsageError(str(exc)) from exc


def _field(args) -> Field:
    try:
        return as_field(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_gen(args) -> int:
    spec = _spec(args)
    field = _field(args)
    gens = specht_generators(spec.shape, spec.n, field)
    payload = {
        "lambda": list(spec.shape.parts),
        "n": spec.n,
        "field": field.descriptor(),
        "generators": [{"tableau": [list(r) for r in T.rows], "polynomial": str(f)} for T, f in gens],
    }
    lines = [f"{f}    # T = {T.to_json()}" for T, f in gens]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    spec = _spec(args)
    field = _field(args)
    payload = {"lambda": list(spec.shape.parts), "n": spec.n, "field": field.descriptor()}
    lines = []
    closed = groebner = None
    if args.method in ("closed-form", "both"):
        try:
            closed = closed_form(spec.shape)
        except OutOfRange as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAMILY
        payload["closed_form"] = closed.to_json()
        lines.append(f"closed-form: {closed}")
    if args.method in ("groebner", "both"):
        if spec.n > 8:
            raise UsageError("the Groebner method is limited to n <= 8")
        I = specht_ideal(spec, field)
        I.degree_cap = args.degree_cap
        groebner = series_of_quotient(I)
        payload["groebner"] = groebner.to_json()
        lines.append(f"groebner:    {groebner}")
    status = EXIT_OK
    if closed is not None and groebner is not None:
        match = closed == groebner
        payload["match"] = match
        lines.append("match" if match else "MISMATCH")
        status = EXIT_OK if match else EXIT_FAIL
    _emit(args, payload, "\n".join(lines))
    return status


def _read_ideal(args, field) -> Ideal:
    if args.lam is not None:
        return specht_ideal(_spec(args), field)
    source = args.ideal
    if source is None:
        raise UsageError("gb needs --lambda or --ideal FILE ('-' for stdin)")
    text = sys.stdin.read() if source == "-" else open(source, encoding="utf8").read()
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        data = json.loads(stripped)
        if isinstance(data, dict):
            gens = data["generators"]
            n = data.get("n") or args.n or infer_nvars(gens)
            if "field" in data and args.field is None:
                field = as_field(data["field"])
        else:
            gens, n = data, args.n or infer_nvars(data)
    else:
        gens = [ln.strip() for ln in stripped.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        n = args.n or infer_nvars(gens)
    return Ideal([parse_polynomial(g, n, field) for g in gens], n, field)


def cmd_gb(args) -> int:
    field = _field(args)
    I = _read_ideal(args, field)
    I.degree_cap = args.degree_cap
    gb = buchberger(I)
    payload = {"n": I.n, "field": I.field.descriptor(), **gb.to_json()}
    lines = [f"{f}    # lm = {m}" for f, m in zip(gb.elements, gb.leading_monomials())]
    _emit(args, payload, "\n".join(lines) if lines else "0")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    if args.max_n is not None and args.max_n > 8:
        raise UsageError("--max-n is limited to 8")
    reports = [run_suite(name, max_n=args.max_n, d=args.d, seed=args.seed, trials=args.trials) for name in names]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = reports[0].to_json(not args.no_timings) if len(reports) == 1 else {
            "pass": ok,
            "suites": [r.to_json(not args.no_timings) for r in reports],
        }
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for r in reports:
            for c in r.cases:
                mark = "PASS" if c.status == "pass" else "FAIL"
                extra = "" if c.witness is None else f"  witness={c.witness}"
                print(f"[{mark}] {r.suite}: {c.id} ({c.seconds:.2f}s){extra}")
            print(f"{r.suite}: {'pass' if r.passed else 'FAIL'} ({len(r.cases)} cases)")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_syt_count(args) -> int:
    spec = _spec(args)
    hook = count_syt_hook(spec.shape)
    payload = {"lambda": list(spec.shape.parts), "hook_formula": hook}
    text = f"#SYT{spec.shape} = {hook} (hook formula)"
    if spec.n <= 10:
        enumerated = len(enumerate_standard_tableaux(spec.shape))
        payload["enumerated"] = enumerated
        text += f", {enumerated} enumerated"
    _emit(args, payload, text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="specht-hilbert", description="Specht ideals, Groebner bases and Hilbert series.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, lam=True):
        if lam:
            p.add_argument("--lambda", dest="lam", help="partition, e.g. 3,2")
            p.add_argument("--n", type=int, help="number of variables (inferred from lambda)")
        p.add_argument("--field", default=None, help="q or fp:<prime> (default q)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("gen", help="print the Specht generators of a shape")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hilbert", help="Hilbert series of R/I_lambda")
    common(p)
    p.add_argument("--method", choices=("closed-form", "groebner", "both"), default="both")
    p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("gb", help="reduced Groebner basis (lex, x_n > ... > x_1)")
    common(p)
    p.add_argument("--ideal", help="file with one polynomial per line, or JSON; '-' reads stdin")
    p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}, or all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timings", action="store_true", help="omit wall-clock fields from JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("syt-count", help="number of standard tableaux of a shape")
    common(p)
    p.set_defaults(func=cmd_syt_count)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PolynomialSyntaxError, ShapeError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegreeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
