"""Exact reproductions of the worked examples and counterexamples.

Every verifier returns a :class:`VerificationReport`.  ``expected`` lists the
checked quantities; the status is ``pass`` exactly when each of them equals
the corresponding entry of ``computed``.  Extra entries in ``computed`` are
informational.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

from .bimodule import UPoly2
from .commutative import MLParams, verify_ml_example
from .core import NcPoly, Word, commutator, compose, weighted_degree
from .equation import (
    EquationSpec,
    FreeFamilyParams,
    OverlapFamilyParams,
    VerificationError,
    assemble_and_verify,
    completeness_check,
    free_generators,
)
from .series import (
    GroupAlgElem,
    SeriesError,
    anticommutator_with,
    format_graded,
    graded_to_elem,
    group_degree,
    negative_exponent_scan,
    series_power_positive_part,
    series_sqrt,
)
from .words import homogeneous_nth_root, overlap_pairs, proper_composite_test


@dataclass
class VerificationReport:
    claim: str
    params: dict
    computed: dict
    expected: dict
    citation: str
    status: str = "fail"
    millis: float = 0.0

    def mismatches(self) -> list[str]:
        return [k for k, v in self.expected.items() if self.computed.get(k) != v]

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("millis")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def format_text(self) -> str:
        lines = [f"{self.claim}: {self.status.upper()}  ({self.citation})"]
        if self.params:
            lines.append("  params: " + ", ".join(f"{k}={v}" for k, v in self.params.items()))
        for k, v in self.expected.items():
            got = self.computed.get(k)
            mark = "ok " if got == v else "BAD"
            lines.append(f"  [{mark}] {k} = {got}" + ("" if got == v else f"  (expected {v})"))
        for k, v in self.computed.items():
            if k not in self.expected:
                lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def finish_report(claim: str, params: dict, computed: dict, expected: dict, citation: str, start: float) -> VerificationReport:
    report = VerificationReport(claim, params, computed, expected, citation)
    report.status = "fail" if report.mismatches() else "pass"
    report.millis = round((time.perf_counter() - start) * 1000, 3)
    return report


def _q(x) -> str:
    return str(Fraction(x))


def _require_int(name: str, value: Any, least: int):
    if not isinstance(value, int) or isinstance(value, bool) or value < least:
        raise ValueError(f"{name} must be an integer >= {least}, got {value!r}")


# --- commutator-degree counterexample ----------------------------------------


@dataclass(frozen=True)
class CounterexampleData:
    u: Word
    v: Word
    w: Word
    r: NcPoly
    s: NcPoly
    f: NcPoly
    g: NcPoly


def counterexample_data(k: int) -> CounterexampleData:
    """``u = (xy)^k x``, ``v = xy``, ``w = yx``, ``r = uv + uw + wu``, ``s = v + w``,
    ``f = u^3 + r``, ``g = u^2 + s``."""
    _require_int("k", k, 2)
    u, v, w = "xy" * k + "x", "xy", "yx"
    P = NcPoly.word
    r = P(u + v) + P(u + w) + P(w + u)
    s = P(v) + P(w)
    return CounterexampleData(u, v, w, r, s, P(u * 3) + r, P(u * 2) + s)


def verify_commutator_counterexample(k: int) -> VerificationReport:
    """Low-degree commutator of two polynomials that are not powers of a common element."""
    start = time.perf_counter()
    d = counterexample_data(k)
    P = NcPoly.word
    U = P(d.u)
    fg = commutator(d.f, d.g)
    explicit = P(d.u + d.v + d.v) + P(d.u + d.v + d.w) - P(d.v + d.w + d.u) - P(d.w + d.w + d.u)
    top_f, top_g = d.f.top_component(), d.g.top_component()
    root_f = homogeneous_nth_root(top_f, 3)
    root_g = homogeneous_nth_root(top_g, 2)
    deg_f, deg_g, deg_c = d.f.degree, d.g.degree, fg.degree
    computed = {
        "equation_residual_is_zero": not (commutator(U ** 3, d.s) + commutator(d.r, U ** 2)),
        "commutator": str(fg),
        "commutator_matches_explicit": fg == explicit,
        "deg_commutator": deg_c,
        "deg_g": deg_g,
        "deg_f": deg_f,
        "degree_chain": deg_c < deg_g < deg_f,
        "ratio": _q(Fraction(deg_c, deg_g)),
        "f_composite": proper_composite_test(d.f) is not None,
        "g_composite": proper_composite_test(d.g) is not None,
        "cube_root_of_top_f": str(root_f.root) if root_f else None,
        "square_root_of_top_g": str(root_g.root) if root_g else None,
        "degrees_mutually_nondividing": deg_f % deg_g != 0 and deg_g % deg_f != 0,
        "deg_r_plus_deg_s": d.r.degree + d.s.degree,
    }
    expected = {
        "equation_residual_is_zero": True,
        "commutator_matches_explicit": True,
        "deg_commutator": 2 * k + 5,
        "deg_g": 4 * k + 2,
        "deg_f": 6 * k + 3,
        "degree_chain": True,
        "ratio": _q(Fraction(1, 2) + Fraction(2, 2 * k + 1)),
        "f_composite": False,
        "g_composite": False,
        "cube_root_of_top_f": str(U),
        "square_root_of_top_g": str(U),
        "degrees_mutually_nondividing": True,
        "deg_r_plus_deg_s": 2 * k + 5,
    }
    return finish_report(
        "commutator-degree counterexample", {"k": k}, computed, expected,
        "deg [f,g] = 2k+5 < deg g = 4k+2 with f, g not in a common K[h]", start,
    )


# --- square root in the Malcev-Neumann completion --------------------------------


def default_radical_cutoff(k: int) -> int:
    """Smallest-effort cutoff that certifies the positive part of rho^3."""
    return -(2 * k + 1)


def verify_radical_counterexample(k: int, cutoff: int | None = None, cap: int = 8) -> VerificationReport:
    """The positive part of the cube of ``sqrt(g)`` is ``f``, a polynomial."""
    start = time.perf_counter()
    d = counterexample_data(k)
    cutoff = default_radical_cutoff(k) if cutoff is None else cutoff
    params = {"k": k, "cutoff": cutoff}
    du = len(d.u)
    a1_expected = GroupAlgElem.word(d.w + d.u.upper()[::-1])
    vw = GroupAlgElem.from_ncpoly(d.s)
    expected = {
        "a1": str(a1_expected),
        "a1_solves": True,
        "deg_a1": 1 - 2 * k,
        "positive_part_of_rho_cubed": str(d.f),
        "positive_part_equals_f": True,
        "negative_exponent_scan": [],
        "deg_u2_a2": 3 - 2 * k,
        "deg_u2_a2_negative": True,
    }
    citation = "the positive-degree part of sqrt(g)^3 is the polynomial f"
    try:
        rho = series_sqrt(d.g, d.u, cutoff, cap=cap)
        pos = series_power_positive_part(rho, 3)
    except SeriesError as exc:
        computed = {"error": str(exc)}
        return finish_report("radical counterexample", params, computed, expected, citation, start)
    a1 = rho.components.get(1 - 2 * k, GroupAlgElem.zero())
    pos_elem = graded_to_elem(pos)
    # a2 solves u a2 + a2 u = -a1^2, which is homogeneous of degree 2 deg(a1)
    deg_a2 = 2 * (1 - 2 * k) - du
    computed = {
        "a1": str(a1),
        "a1_solves": anticommutator_with(d.u, a1) == vw,
        "deg_a1": group_degree(next(iter(a1.support()))) if a1 else None,
        "rho": str(rho),
        "positive_part_of_rho_cubed": format_graded(pos),
        "positive_part_equals_f": pos_elem == GroupAlgElem.from_ncpoly(d.f),
        "negative_exponent_scan": negative_exponent_scan(pos),
        "deg_u2_a2": 2 * du + deg_a2,
        "deg_u2_a2_negative": 2 * du + deg_a2 < 0,
    }
    return finish_report("radical counterexample", params, computed, expected, citation, start)


# --- commutative example ----------------------------------------------------------


def verify_jacobian_example(a: int, b: int) -> VerificationReport:
    start = time.perf_counter()
    params = MLParams(a, b)
    r = verify_ml_example(params)
    computed = {
        "p": r["p"],
        "identity_holds": r["identity_holds"],
        "all_coefficients_nonzero": r["all_coefficients_nonzero"],
        "jacobian": r["jacobian"],
        "deg_f": r["deg_f"],
        "deg_g": r["deg_g"],
        "deg_wedge": r["deg_wedge"],
    }
    expected = {
        "identity_holds": True,
        "all_coefficients_nonzero": True,
        "jacobian": "y",
        "deg_f": int(r["deg_f_formula"]) if r["deg_f_formula"].denominator == 1 else _q(r["deg_f_formula"]),
        "deg_g": r["deg_g_formula"],
        "deg_wedge": 3,
    }
    return finish_report(
        "commutative pair with J(f,g) = y", {"a": a, "b": b, "c": params.c, "k": params.k},
        computed, expected, "deg(df ^ dg) = 3 although f, g have large degree", start,
    )


# --- the commutator equation ------------------------------------------------------


def _random_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if c or not nonzero:
            return c


def _random_upoly(rng: random.Random, max_degree: int = 2, terms: int = 3) -> UPoly2:
    out = UPoly2.zero()
    for _ in range(rng.randint(1, terms)):
        a = rng.randint(0, max_degree)
        b = rng.randint(0, max_degree - a)
        out = out + UPoly2.mono(a, b, _random_fraction(rng, nonzero=True))
    return out


def _random_homogeneous(rng: random.Random, degree: int) -> UPoly2:
    out = UPoly2.zero()
    for i in rng.sample(range(degree + 1), rng.randint(1, degree + 1)):
        out = out + UPoly2.mono(i, degree - i, _random_fraction(rng, nonzero=True))
    return out


def overlap_a_range(spec: EquationSpec, max_a: int) -> range:
    """Admissible ``a`` for the overlap family: ``a + 1 >= l(n-1)``."""
    return range(max(0, spec.l * (spec.n - 1) - 1), max_a + 1)


def random_overlap_params(spec: EquationSpec, rng: random.Random, a: int) -> OverlapFamilyParams | None:
    pairs = overlap_pairs(spec.u)
    if not pairs:
        return None
    e = a - spec.l * (spec.n - 1)
    s3 = _random_homogeneous(rng, e) if e >= 0 and rng.random() < 0.8 else UPoly2.zero()
    return OverlapFamilyParams(rng.choice(pairs), a, _random_fraction(rng), s3)


def random_free_params(spec: EquationSpec, rng: random.Random, generators: list[Word]) -> FreeFamilyParams | None:
    if not generators:
        return None
    return FreeFamilyParams(rng.choice(generators), _random_upoly(rng))


def random_family_trial(spec: EquationSpec, rng: random.Random, a: int, generators: list[Word]):
    """Assemble one random combination of all families and check it by expansion."""
    r1 = [_random_fraction(rng) for _ in range(rng.randint(0, 3))]
    s1 = [_random_fraction(rng) for _ in range(rng.randint(0, 3))]
    free = [p for p in (random_free_params(spec, rng, generators),) if p is not None]
    overlap = [p for p in (random_overlap_params(spec, rng, a),) if p is not None]
    return assemble_and_verify(spec, r1, s1, free, overlap)


def verify_commutator_equation(
    spec: EquationSpec, trials: int = 20, seed: int = 0, max_a: int = 4,
    completeness_degree: int = 6, free_length: int = 3,
) -> VerificationReport:
    """Random instantiations of every family, plus the completeness oracle when ``|u| <= 3``."""
    start = time.perf_counter()
    rng = random.Random(seed)
    gens = free_generators(spec.u, free_length)
    a_values = list(overlap_a_range(spec, max(max_a, spec.l * (spec.n - 1) - 1)))
    failures = 0
    for i in range(trials):
        try:
            random_family_trial(spec, rng, a_values[i % len(a_values)], gens)
        except VerificationError:
            failures += 1
    computed = {
        "trials": trials,
        "failures": failures,
        "overlap_pairs": [p.degree for p in overlap_pairs(spec.u)],
        "free_generators_checked": len(gens),
    }
    expected = {"failures": 0}
    if len(spec.u) <= 3:
        rep = completeness_check(spec, completeness_degree)
        computed.update({
            "completeness_degree": completeness_degree,
            "oracle_dimension": rep.oracle_dimension,
            "family_dimension": rep.family_dimension,
            "joint_dimension": rep.joint_dimension,
            "completeness_agrees": rep.agrees,
        })
        expected["completeness_agrees"] = True
    return finish_report(
        "solutions of [u^(lm), s] = [u^(ln), r]",
        {"u": spec.u, "l": spec.l, "m": spec.m, "n": spec.n, "trials": trials, "seed": seed},
        computed, expected, "families built from free generators and overlap pairs solve the equation", start,
    )


# --- overlap example -------------------------------------------------------------


def verify_overlap_example(k: int = 3) -> VerificationReport:
    _require_int("k", k, 2)
    start = time.perf_counter()
    P = NcPoly.word
    u0 = "xyx"
    f = P("xyx") + P("yxx")
    t1, t2 = P("xy"), P("yx")
    # the combination lies in the K[f]-bimodule generated by t1, t2; note the
    # first product is t1 f (the variant f t1 - f t2 + t2 f is not equal to it)
    lhs = t1 * f - f * t2 + t2 * f
    rhs = (P("xy") + P("yx")) * P("yxx")
    lead = rhs.leading_word()
    u = "xy" * k + "x"
    pairs = overlap_pairs(u)
    computed = {
        "identity_holds": lhs == rhs,
        "product": str(rhs),
        "variant_f_t1_holds": f * t1 - f * t2 + t2 * f == rhs,
        "leading_monomial": lead,
        "leading_avoids_u": not lead.startswith(u0) and not lead.endswith(u0),
        "pair_count": len(pairs),
        "pair_degrees": [p.degree for p in pairs],
        "pairs_commute_past_u": all(p.t1 + u == u + p.t2 for p in pairs),
        "pairs": [f"{p.t1}/{p.t2}" for p in pairs],
    }
    expected = {
        "identity_holds": True,
        "variant_f_t1_holds": False,
        "leading_monomial": "xyyxx",
        "leading_avoids_u": True,
        "pair_count": k,
        "pair_degrees": [2 * j for j in range(1, k + 1)],
        "pairs_commute_past_u": True,
    }
    return finish_report(
        "overlap pairs and a non-free leading monomial", {"k": k}, computed, expected,
        "t1 f - f t2 + t2 f = (xy+yx)yxx; (xy)^k x has k overlap pairs", start,
    )


# --- non-centralizer example -----------------------------------------------------


def verify_non_centralizer_example(k: int, m: int, n: int) -> VerificationReport:
    """``f = y + (x + y^k)^m``, ``g = (x + y^k)^n``: small commutator, no common centralizer."""
    _require_int("k", k, 3)
    _require_int("n", n, 1)
    _require_int("m", m, n + 1)
    start = time.perf_counter()
    y = NcPoly.word("y")
    base = NcPoly.word("x") + NcPoly.word("y" * k)
    f = y + base ** m
    g = base ** n
    fg = commutator(f, g)
    leading = NcPoly({"y" * (k * i) + "x" + "y" * (k * (n - 1 - i)): 1 for i in range(n)})
    computed = {
        "identity_holds": fg == commutator(y, g),
        "deg_commutator": fg.degree,
        "deg_g": g.degree,
        "deg_f": f.degree,
        "degree_chain": fg.degree < g.degree < f.degree,
        "leading_component_matches": fg.top_component() == commutator(y, leading),
        "leading_component": str(fg.top_component()),
    }
    expected = {
        "identity_holds": True,
        "deg_commutator": k * (n - 1) + 2,
        "deg_g": k * n,
        "deg_f": k * m,
        "degree_chain": True,
        "leading_component_matches": True,
    }
    return finish_report(
        "commutator of y + (x+y^k)^m and (x+y^k)^n", {"k": k, "m": m, "n": n},
        computed, expected, "[f,g] = [y,(x+y^k)^n] has degree k(n-1)+2 < kn < km", start,
    )


# --- degree gap -----------------------------------------------------------------


def degree_gap_report(f: NcPoly, g: NcPoly, p: NcPoly | None = None) -> VerificationReport:
    """``D(f, g) = deg [f, g] / deg(fg)`` and, for ``p``, the bound ``deg p(f, g) >= D w(p)``."""
    if not f or not g:
        raise ValueError("f and g must be nonzero")
    start = time.perf_counter()
    fg = commutator(f, g)
    if not fg:
        raise ValueError("[f, g] = 0: f and g are algebraically dependent")
    D = Fraction(fg.degree, f.degree + g.degree)
    computed = {
        "deg_f": f.degree,
        "deg_g": g.degree,
        "deg_commutator": fg.degree,
        "D": _q(D),
    }
    expected = {}
    params = {"f": str(f), "g": str(g)}
    if p is not None:
        if not p:
            raise ValueError("p must be nonzero")
        params["p"] = str(p)
        w = weighted_degree(p, {"x": f.degree, "y": g.degree})
        value = compose(p, f, g)
        bound = D * w
        computed.update({
            "weighted_degree": w,
            "bound": _q(bound),
            "deg_p_of_f_g": value.degree if value else None,
            "bound_holds": bool(value) and value.degree >= bound,
        })
        expected["bound_holds"] = True
    return finish_report("degree gap", params, computed, expected, "deg p(f,g) >= D(f,g) w(p)", start)
