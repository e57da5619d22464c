"""Command line front end: ``freealg verify ...``, ``solve``, ``bimodule decompose``, ``gap``.

Every command prints a report (``--json`` for the machine-readable form) and
exits with status 0 exactly when all of its checks pass; bad input exits 2.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import verify as V
from .bimodule import from_bimodule_form, to_canonical_bimodule_form
from .equation import (
    EquationSpec,
    FreeFamilyParams,
    OverlapFamilyParams,
    VerificationError,
    assemble_and_verify,
    completeness_check,
    free_generators,
)
from .parse import ParseError, parse_poly, parse_upoly, parse_word
from .series import SeriesError
from .words import overlap_pairs


def _word(text: str) -> str:
    try:
        return parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _poly(text: str):
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fractions(text: str) -> list[Fraction]:
    try:
        return [Fraction(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _spec_args(p: argparse.ArgumentParser):
    p.add_argument("--u", type=_word, required=True, help="primitive word, e.g. xyx or (xy)^2x")
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")

    parser = argparse.ArgumentParser(prog="freealg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="reproduce a worked example")
    vsub = verify.add_subparsers(dest="claim", required=True)

    p = vsub.add_parser("thm31", parents=[common], help="commutator-degree counterexample")
    p.add_argument("--k", type=int, required=True)

    p = vsub.add_parser("thm42", parents=[common], help="square root and the positive part of its cube")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=None, help="lowest degree of g matched exactly (default -(2k+1))")
    p.add_argument("--cap", type=int, default=8, help="candidate-closure rounds per component")

    p = vsub.add_parser("ex11", parents=[common], help="commutative pair with J(f,g) = y")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = vsub.add_parser("ex23", parents=[common], help="random family solutions of the commutator equation")
    _spec_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)

    p = vsub.add_parser("ex24", parents=[common], help="overlap pairs and the bimodule anomaly")
    p.add_argument("--k", type=int, default=3)

    p = vsub.add_parser("intro", parents=[common], help="commutator of y+(x+y^k)^m and (x+y^k)^n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("solve", parents=[common], help="build and check a solution of [u^lm, s] = [u^ln, r]")
    _spec_args(p)
    p.add_argument("--r1", type=_fractions, default=[], help="coefficients of r1(u), constant first")
    p.add_argument("--s1", type=_fractions, default=[], help="coefficients of s1(u), constant first")
    p.add_argument("--free", nargs=2, action="append", default=[], metavar=("T", "R2"),
                   help="free generator T with coefficient R2 in u1, u2 (repeatable)")
    p.add_argument("--overlap", nargs="+", action="append", default=[], metavar="ARG",
                   help="PAIR_DEGREE A XI [S3]: overlap family (repeatable)")
    p.add_argument("--completeness", type=int, default=None, metavar="D",
                   help="also compare the families with all solutions of degree <= D")
    p.add_argument("--list", type=int, default=None, metavar="L",
                   help="list free generators up to length L and the overlap pairs")

    bim = sub.add_parser("bimodule", help="bimodule coordinates over K[u]")
    bsub = bim.add_subparsers(dest="action", required=True)
    p = bsub.add_parser("decompose", parents=[common])
    p.add_argument("--u", type=_word, required=True)
    p.add_argument("--poly", type=_poly, required=True)

    p = sub.add_parser("gap", parents=[common], help="degree gap D(f,g) and its bound for p(f,g)")
    p.add_argument("--f", type=_poly, required=True)
    p.add_argument("--g", type=_poly, required=True)
    p.add_argument("--p", type=_poly, default=None)
    return parser


def _overlap_params(spec: EquationSpec, args: list[str]) -> OverlapFamilyParams:
    if len(args) not in (3, 4):
        raise ValueError("--overlap takes PAIR_DEGREE A XI [S3]")
    degree, a, xi = int(args[0]), int(args[1]), Fraction(args[2])
    for pair in overlap_pairs(spec.u):
        if pair.degree == degree:
            break
    else:
        raise ValueError(f"u={spec.u!r} has no overlap pair of degree {degree}")
    s3 = parse_upoly(args[3]) if len(args) == 4 else parse_upoly("0")
    return OverlapFamilyParams(pair, a, xi, s3)


def run_solve(args) -> V.VerificationReport:
    start = time.perf_counter()
    spec = EquationSpec(args.u, args.l, args.m, args.n)
    free = [FreeFamilyParams(_word(t), parse_upoly(c)) for t, c in args.free]
    overlap = [_overlap_params(spec, o) for o in args.overlap]
    params = {"u": spec.u, "l": spec.l, "m": spec.m, "n": spec.n}
    computed: dict = {}
    expected: dict = {}
    if args.list is not None:
        computed["free_generators"] = free_generators(spec.u, args.list)
        computed["overlap_pairs"] = [f"{p.t1}/{p.t2}" for p in overlap_pairs(spec.u)]
    try:
        sol = assemble_and_verify(spec, args.r1, args.s1, free, overlap)
        computed.update({"r": str(sol.r), "s": str(sol.s), "equation_holds": True})
    except VerificationError as exc:
        computed.update({"equation_holds": False, "error": str(exc)})
    expected["equation_holds"] = True
    if args.completeness is not None:
        rep = completeness_check(spec, args.completeness)
        computed.update({
            "oracle_dimension": rep.oracle_dimension,
            "family_dimension": rep.family_dimension,
            "completeness_agrees": rep.agrees,
        })
        expected["completeness_agrees"] = True
    return V.finish_report("solution of [u^(lm), s] = [u^(ln), r]", params, computed, expected,
                     "solution assembled from the families", start)


def run_decompose(args) -> V.VerificationReport:
    start = time.perf_counter()
    form = to_canonical_bimodule_form(args.poly, args.u)
    computed = {
        "form": form.to_dict(),
        "normal": form.is_normal(),
        "round_trip": from_bimodule_form(form) == args.poly,
    }
    return V.finish_report("bimodule decomposition", {"u": args.u, "poly": str(args.poly)},
                     computed, {"normal": True, "round_trip": True},
                     "unique coordinates over the generators of the K[u]-bimodule", start)


def dispatch(args) -> V.VerificationReport:
    if args.command == "verify":
        if args.claim == "thm31":
            return V.verify_commutator_counterexample(args.k)
        if args.claim == "thm42":
            return V.verify_radical_counterexample(args.k, args.cutoff, args.cap)
        if args.claim == "ex11":
            return V.verify_jacobian_example(args.a, args.b)
        if args.claim == "ex23":
            spec = EquationSpec(args.u, args.l, args.m, args.n)
            return V.verify_commutator_equation(spec, args.trials, args.seed)
        if args.claim == "ex24":
            return V.verify_overlap_example(args.k)
        if args.claim == "intro":
            return V.verify_non_centralizer_example(args.k, args.m, args.n)
    if args.command == "solve":
        return run_solve(args)
    if args.command == "bimodule":
        return run_decompose(args)
    if args.command == "gap":
        return V.degree_gap_report(args.f, args.g, args.p)
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = dispatch(args)
    except (ValueError, SeriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.format_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
