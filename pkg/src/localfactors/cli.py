"""Command line interface.

Exit status: 0 success / PASS, 1 usage or parse error, 2 sweep
counterexamples, 3 numeric tolerance failure.

Values starting with "-" must be attached to their option, e.g.
``--at=-1/2`` or ``--window=-3,3``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import mutations, numeric
from .grammar import ParseError, format_rep, parse, parse_block, parse_cq, parse_qq
from .jsonio import OPAQUE_FLAG, JsonReport, sweep_document
from .lfactor import GammaR, atom_str, gj_lfactor, poles_in_window
from .parameters import Field, FieldMismatch, ParameterError, dual
from .predicates import pair_reducible, pole_report, theta_certificate
from .sweeps import PROPERTIES, GridSpec, run_sweep
from .tensor import rs_lfactor

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_TOLERANCE = 0, 1, 2, 3

DUPLICATION_TOL = 1e-9
TATE_TOL = 1e-6

FIELDS = {"real": Field.REAL, "complex": Field.COMPLEX, "nonarch": Field.NONARCH}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _window(text: str) -> tuple:
    try:
        lo, hi = (parse_qq(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO,HI rationals, got {text!r}") from None
    return lo, hi


def _fmt_poles(poles) -> str:
    return ", ".join(f"s={s} (order {k})" for s, k in poles) or "none"


def _fmt_float(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.15g}"
    return f"{z.real:.15g}{z.imag:+.15g}i"


def _emit(args, report: JsonReport, lines):
    if args.json:
        print(report.dumps())
    else:
        for line in lines:
            print(line)
        if report.flags:
            print("flags: " + ", ".join(report.flags))


def _flags(*factors) -> tuple:
    return (OPAQUE_FLAG,) if any(f.opaque_degraded for f in factors) else ()


def cmd_lfactor(args):
    rho = parse(args.rep)
    L = gj_lfactor(rho)
    lo, hi = args.window
    poles = tuple(poles_in_window(L, lo, hi))
    rep = JsonReport("lfactor", (format_rep(rho),), lfactor=L, poles=poles, flags=_flags(L))
    _emit(args, rep, [f"L(s, {format_rep(rho)}) = {L}",
                      f"poles in [{lo}, {hi}]: {_fmt_poles(poles)}"])
    return EXIT_OK


def cmd_pole(args):
    rho = parse(args.rep)
    L = gj_lfactor(rho)
    pr = pole_report(L, args.at)
    rep = JsonReport("pole", (format_rep(rho),), lfactor=L, poles=((pr.s0, pr.order),),
                     pole_report=pr, flags=_flags(L))
    contrib = ", ".join(f"{atom_str(a)} x{k}" for a, k in pr.contributors) or "none"
    _emit(args, rep, [f"L(s, {format_rep(rho)}) has a pole of order {pr.order} at s={pr.s0}",
                      f"contributors: {contrib}"])
    return EXIT_OK


def cmd_dual(args):
    print(format_rep(dual(parse(args.rep))))
    return EXIT_OK


def cmd_rs(args):
    r1, r2 = parse(args.rep1), parse(args.rep2)
    L = rs_lfactor(r1, r2)
    lo, hi = args.window
    poles = tuple(poles_in_window(L, lo, hi))
    rep = JsonReport("rs", (format_rep(r1), format_rep(r2)), lfactor=L, poles=poles,
                     flags=_flags(L))
    _emit(args, rep, [f"L(s, {format_rep(r1)} x {format_rep(r2)}) = {L}",
                      f"poles in [{lo}, {hi}]: {_fmt_poles(poles)}"])
    return EXIT_OK


def cmd_reducible(args):
    b1, b2 = parse_block(args.block1), parse_block(args.block2)
    verdict = "reducible" if pair_reducible(b1, b2) else "irreducible"
    flags = (OPAQUE_FLAG,) if parse(args.block1).opaque or parse(args.block2).opaque else ()
    rep = JsonReport("reducible", (args.block1, args.block2), verdict=verdict, flags=flags)
    _emit(args, rep, [verdict])
    return EXIT_OK


def cmd_theta(args):
    rho = parse(args.rep)
    cert = theta_certificate(rho)
    flags = _flags(gj_lfactor(rho))
    rep = JsonReport("theta-check", (format_rep(rho),), certificate=cert,
                     verdict="certified" if cert.certified else "inconclusive", flags=flags)
    _emit(args, rep, [
        f"certified={str(cert.certified).lower()}",
        f"L(s, sigma) pole order at 1/2: {cert.sigma_pole_at_half.order}",
        f"L(s, sigma^vee) pole order at 1/2: {cert.dual_pole_at_half.order}",
        f"reason: {cert.reason}",
    ])
    return EXIT_OK


def _grid(args, f: Field) -> GridSpec:
    kw = {}
    if args.m_range is not None:
        kw["m_range"] = tuple(args.m_range)
    if args.r_values is not None:
        kw["r_values"] = tuple(parse_cq(x) for x in args.r_values.split(","))
    if args.c_values is not None:
        kw["c_values"] = tuple(parse_qq(x) for x in args.c_values.split(","))
    if args.zeta_orders is not None:
        kw["zeta_orders"] = tuple(int(x) for x in args.zeta_orders.split(","))
    if args.opaque_degrees is not None:
        kw["opaque_degrees"] = tuple(int(x) for x in args.opaque_degrees.split(","))
    return GridSpec(f, max_length=args.max_length, max_blocks=args.max_blocks,
                    ramified=args.ramified, **kw)


def cmd_sweep(args):
    fields = list(Field) if args.field == "all" else [FIELDS[args.field]]
    try:
        grids = [_grid(args, f) for f in fields]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with mutations.mutated(*args.mutation):
        reports = [run_sweep(args.property, g, workers=args.workers) for g in grids]
    timing = not args.no_timing
    for r in reports:
        line = (f"{args.property} {r.grid.field.name}: {r.verdict} "
                f"cases={r.cases} skipped={r.skipped} degraded={r.degraded} "
                f"counterexamples={len(r.counterexamples)}")
        if timing:
            line += f" time={r.wall_time:.2f}s"
        print(line)
    doc = sweep_document(args.property, reports, timing)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    return EXIT_COUNTEREXAMPLE if doc["verdict"] == "FAIL" else EXIT_OK


def cmd_numeric(args):
    if args.check == "duplication":
        err = numeric.check_duplication(args.n)
        ok = err <= DUPLICATION_TOL
        print(f"duplication max relative error over {args.n} points: {err:.15g} "
              f"(tolerance {DUPLICATION_TOL:g}) {'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_TOLERANCE
    if args.m is None or args.s is None:
        print("error: tate needs --m and --s", file=sys.stderr)
        return EXIT_USAGE
    s = complex(parse_cq(args.s))
    spec = numeric.QuadratureSpec(nodes=args.nodes)
    try:
        value = numeric.tate_integral(args.m, s, spec)
    except numeric.ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    closed = numeric.eval_atom(GammaR(args.m), s)
    err = abs(value - closed) / abs(closed)
    ok = err <= TATE_TOL
    print(f"tate integral m={args.m} s={args.s}: {_fmt_float(value)}")
    print(f"closed form {atom_str(GammaR(args.m))} at s: {_fmt_float(closed)}")
    print(f"relative error: {err:.15g} (tolerance {TATE_TOL:g}) {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_TOLERANCE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="localfactors", description="Exact local L-factor calculator for GL_n.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    default_window = (Fraction(-3), Fraction(3))

    s = sub.add_parser("lfactor", help="Godement-Jacquet L-factor of a product")
    s.add_argument("rep")
    s.add_argument("--window", type=_window, default=default_window,
                   help="report real poles in LO,HI (default -3,3)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_lfactor)

    s = sub.add_parser("pole", help="pole order of L(s, rep) at a rational point")
    s.add_argument("rep")
    s.add_argument("--at", type=parse_qq, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_pole)

    s = sub.add_parser("dual", help="contragredient, as an expression")
    s.add_argument("rep")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("rs", help="Rankin-Selberg L-factor L(s, rep1 x rep2)")
    s.add_argument("rep1")
    s.add_argument("rep2")
    s.add_argument("--window", type=_window, default=default_window)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_rs)

    s = sub.add_parser("reducible", help="is block1 x block2 reducible?")
    s.add_argument("block1")
    s.add_argument("block2")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_reducible)

    s = sub.add_parser("theta-check", help="no-pole-at-1/2 certificate for the full theta lift")
    s.add_argument("rep")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("sweep", help="exhaustive grid verification")
    s.add_argument("property", choices=PROPERTIES)
    s.add_argument("--field", choices=["all", *FIELDS], default="all")
    s.add_argument("--m-range", nargs=2, type=int, metavar=("LO", "HI"))
    s.add_argument("--r-values", help="comma separated complex rationals")
    s.add_argument("--c-values", help="comma separated rationals")
    s.add_argument("--zeta-orders", help="comma separated root-of-unity orders")
    s.add_argument("--max-length", type=int, default=4)
    s.add_argument("--max-blocks", type=int, default=2)
    s.add_argument("--ramified", action="store_true", help="add ramified segments")
    s.add_argument("--opaque-degrees", help="add opaque cuspidal segments of these degrees")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--mutation", action="append", default=[], choices=mutations.ALL,
                   help="enable a deliberate rule corruption (mutation testing)")
    s.add_argument("--out", help="write the JSON report here")
    s.add_argument("--no-timing", action="store_true", help="omit wall times")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("numeric", help="floating-point oracle checks")
    s.add_argument("check", choices=["duplication", "tate"])
    s.add_argument("--n", type=int, default=20, help="duplication sample count")
    s.add_argument("--m", type=int, choices=[0, 1])
    s.add_argument("--s", help="complex rational evaluation point")
    s.add_argument("--nodes", type=int, default=20000)
    s.set_defaults(func=cmd_numeric)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ParameterError, FieldMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
