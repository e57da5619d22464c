"""Parametric solutions of ``[u^(l m), s] = [u^(l n), r]`` for a primitive monomial u.

Solutions are sums of three kinds of contributions:

* arbitrary polynomials ``r1(u)``, ``s1(u)``;
* for a free generator ``t``: ``r = Phi_m r2 . t``, ``s = Phi_n r2 . t``;
* for an overlap pair ``(t1, t2)``: homogeneous ``p1 t1 + p2 t2`` and
  ``q1 t1 + q2 t2`` with parameters ``(a, xi, s3)``.

Here ``Phi_b = (u1^(l b) - u2^(l b)) / (u1^l - u2^l)`` and ``c . t`` is the
action ``u1^i u2^j . t = u^i t u^j``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .bimodule import GeneratorKind, UPoly2, _classify
from .core import NcPoly, Word, check_word, coerce_scalar, commutator
from .words import OverlapPair, overlap_pairs, require_primitive


class VerificationError(AssertionError):
    """An assembled solution failed the direct-expansion check (an internal bug)."""


@dataclass(frozen=True)
class EquationSpec:
    u: Word
    l: int
    m: int
    n: int

    def __post_init__(self):
        check_word(self.u)
        require_primitive(self.u)
        for name in ("l", "m", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.m <= self.n:
            raise ValueError(f"need m > n, got m={self.m}, n={self.n}")
        if math.gcd(self.m, self.n) != 1:
            raise ValueError(f"m and n must be coprime, gcd({self.m}, {self.n}) != 1")

    @property
    def left(self) -> NcPoly:
        """``u^(l m)``"""
        return NcPoly.word(self.u * (self.l * self.m))

    @property
    def right(self) -> NcPoly:
        """``u^(l n)``"""
        return NcPoly.word(self.u * (self.l * self.n))

    def defect(self, r: NcPoly, s: NcPoly) -> NcPoly:
        """``[u^(lm), s] - [u^(ln), r]``; zero exactly for solutions."""
        return commutator(self.left, s) - commutator(self.right, r)


@dataclass(frozen=True)
class FreeFamilyParams:
    t: Word
    r2: UPoly2


@dataclass(frozen=True)
class OverlapFamilyParams:
    pair: OverlapPair
    a: int
    xi: Fraction = Fraction(0)
    s3: UPoly2 = field(default_factory=UPoly2.zero)


@dataclass
class EquationSolution:
    spec: EquationSpec
    r: NcPoly
    s: NcPoly
    r1: tuple[Fraction, ...] = ()
    s1: tuple[Fraction, ...] = ()
    free: tuple[FreeFamilyParams, ...] = ()
    overlap: tuple[OverlapFamilyParams, ...] = ()


def phi(b: int, l: int) -> UPoly2:
    """``sum_{i<b} u1^(l(b-1-i)) u2^(l i)``; ``phi(0, l)`` is zero."""
    if b < 0 or l < 1:
        raise ValueError("need b >= 0 and l >= 1")
    return UPoly2._raw({(l * (b - 1 - i), l * i): Fraction(1) for i in range(b)})


def solve_free_part(spec: EquationSpec, params: FreeFamilyParams) -> tuple[NcPoly, NcPoly]:
    """Contribution ``(Phi_m r2 . t, Phi_n r2 . t)`` of a free generator."""
    if _classify(params.t, spec.u).kind is not GeneratorKind.FREE or params.t.startswith(spec.u) \
            or params.t.endswith(spec.u):
        raise ValueError(f"{params.t!r} is not a free generator for u={spec.u!r}")
    p = phi(spec.m, spec.l) * params.r2
    q = phi(spec.n, spec.l) * params.r2
    return p.act(params.t, spec.u), q.act(params.t, spec.u)


def overlap_coefficients(spec: EquationSpec, params: OverlapFamilyParams) -> tuple[UPoly2, UPoly2, UPoly2, UPoly2]:
    """``(p1, p2, q1, q2)`` of the overlap family with parameters ``(a, xi, s3)``."""
    l, m, n, a = spec.l, spec.m, spec.n, params.a
    xi = coerce_scalar(params.xi)
    s3 = params.s3
    if a < 0 or a + 1 < l * (n - 1):
        raise ValueError(f"a+1 < l(n-1): a={a}, l(n-1)={l * (n - 1)}")
    e = a - l * (n - 1)
    if s3:
        if e < 0 or not s3.is_homogeneous() or s3.degree != e:
            raise ValueError(f"s3 must be zero or homogeneous of degree a-l(n-1)={e}")
    u1, u2 = UPoly2.u1, UPoly2.u2
    phi_prev = phi(n - 1, l)
    q1 = u1(a) * xi
    p1 = u1(a + l * (m - n)) * xi
    r3 = u1(e + 1) * xi + u2() * s3
    q2 = (u1(l * (n - 1)) + u2(l) * phi_prev) * s3 + u1(e + 1) * u2(l - 1) * phi_prev * xi
    p2 = u1(l * (m - n)) * q2 + u2(l * n - 1) * phi(m - n, l) * r3
    return p1, p2, q1, q2


def solve_overlap_part(spec: EquationSpec, params: OverlapFamilyParams) -> tuple[NcPoly, NcPoly]:
    """Contribution ``(p1 t1 + p2 t2, q1 t1 + q2 t2)`` of an overlap pair."""
    if params.pair not in overlap_pairs(spec.u):
        raise ValueError(f"{params.pair} is not an overlap pair of u={spec.u!r}")
    p1, p2, q1, q2 = overlap_coefficients(spec, params)
    t1, t2, u = params.pair.t1, params.pair.t2, spec.u
    return p1.act(t1, u) + p2.act(t2, u), q1.act(t1, u) + q2.act(t2, u)


def _power_series(coeffs: Sequence, u: Word) -> NcPoly:
    return NcPoly({u * i: c for i, c in enumerate(coeffs)})


def assemble_and_verify(
    spec: EquationSpec,
    r1: Sequence = (),
    s1: Sequence = (),
    free: Sequence[FreeFamilyParams] = (),
    overlap: Sequence[OverlapFamilyParams] = (),
) -> EquationSolution:
    """Sum all contributions and check the equation by direct expansion.

    ``r1``, ``s1`` are coefficient sequences of polynomials in ``u`` (constant
    term first).
    """
    r = _power_series(r1, spec.u)
    s = _power_series(s1, spec.u)
    for params in free:
        dr, ds = solve_free_part(spec, params)
        r, s = r + dr, s + ds
    for params in overlap:
        dr, ds = solve_overlap_part(spec, params)
        r, s = r + dr, s + ds
    defect = spec.defect(r, s)
    if defect:
        raise VerificationError(f"[u^lm, s] - [u^ln, r] = {defect} != 0")
    return EquationSolution(
        spec, r, s,
        tuple(coerce_scalar(c) for c in r1), tuple(coerce_scalar(c) for c in s1),
        tuple(free), tuple(overlap),
    )


def free_generators(u: Word, max_length: int, alphabet: str = "xy") -> list[Word]:
    """Free generators for ``u`` of length ``1..max_length``, in length-lex order."""
    require_primitive(u)
    out = []
    for e in range(1, max_length + 1):
        for letters in itertools.product(alphabet, repeat=e):
            t = "".join(letters)
            if t.startswith(u) or t.endswith(u):
                continue
            if _classify(t, u).kind is GeneratorKind.FREE:
                out.append(t)
    return out


# --- bounded-degree completeness ----------------------------------------------------


def _graded_shift(spec: EquationSpec) -> int:
    """deg r - deg s for homogeneous solutions."""
    return spec.l * (spec.m - spec.n) * len(spec.u)


def family_basis(spec: EquationSpec, max_degree: int, alphabet: str = "xy") -> list[tuple[NcPoly, NcPoly]]:
    """Solutions from every family with ``deg r, deg s <= max_degree``, one per basis parameter."""
    u, l, m, n = spec.u, spec.l, spec.m, spec.n
    du = len(u)
    out = []
    for i in range(max_degree // du + 1):
        out.append((NcPoly.word(u * i), NcPoly.zero()))
        out.append((NcPoly.zero(), NcPoly.word(u * i)))
    # free: deg r = |t| + du (l(m-1) + i + j)
    for t in free_generators(u, max_degree, alphabet):
        budget = (max_degree - len(t)) // du - l * (m - 1)
        for total in range(budget + 1):
            for i in range(total + 1):
                out.append(solve_free_part(spec, FreeFamilyParams(t, UPoly2.mono(i, total - i))))
    # overlap: deg r = |t1| + du (a + l(m-n))
    for pair in overlap_pairs(u):
        a = max(0, l * (n - 1) - 1)
        while pair.degree + du * (a + l * (m - n)) <= max_degree:
            out.append(solve_overlap_part(spec, OverlapFamilyParams(pair, a, Fraction(1))))
            e = a - l * (n - 1)
            for i in range(e + 1):
                out.append(solve_overlap_part(spec, OverlapFamilyParams(pair, a, Fraction(0), UPoly2.mono(i, e - i))))
            a += 1
    return out


def _words_of_length(e: int, alphabet: str):
    return ("".join(p) for p in itertools.product(alphabet, repeat=e))


def enumerate_solution_space(spec: EquationSpec, max_degree: int, alphabet: str = "xy") -> list[tuple[NcPoly, NcPoly]]:
    """Basis of all solutions with ``deg r, deg s <= max_degree``, by linear algebra.

    Unknowns are the coefficients of every word of ``r`` and ``s``.  The
    equation is graded (a word ``w`` of ``s`` pairs with words of ``r`` of
    length ``|w| + shift``), so each graded block is solved on its own.
    """
    shift = _graded_shift(spec)
    L, R = spec.left, spec.right
    basis = []
    for dr in range(0, max_degree + shift + 1):
        ds = dr - shift
        unknowns: list[tuple[str, Word]] = []
        if 0 <= dr <= max_degree:
            unknowns += [("r", w) for w in _words_of_length(dr, alphabet)]
        if 0 <= ds <= max_degree:
            unknowns += [("s", w) for w in _words_of_length(ds, alphabet)]
        if not unknowns:
            continue
        columns = []
        for side, w in unknowns:
            mono = NcPoly.word(w)
            img = commutator(L, mono) if side == "s" else -commutator(R, mono)
            columns.append(dict(img.items()))
        for vec in linalg.nullspace(columns):
            r = NcPoly({unknowns[j][1]: c for j, c in vec.items() if unknowns[j][0] == "r"})
            s = NcPoly({unknowns[j][1]: c for j, c in vec.items() if unknowns[j][0] == "s"})
            basis.append((r, s))
    return basis


def _pair_vector(r: NcPoly, s: NcPoly) -> dict:
    v = {("r", w): c for w, c in r.items()}
    v.update({("s", w): c for w, c in s.items()})
    return v


@dataclass
class CompletenessReport:
    oracle_dimension: int
    family_dimension: int
    joint_dimension: int
    families_are_solutions: bool

    @property
    def agrees(self) -> bool:
        return (
            self.families_are_solutions
            and self.oracle_dimension == self.family_dimension == self.joint_dimension
        )


def completeness_check(spec: EquationSpec, max_degree: int, alphabet: str = "xy") -> CompletenessReport:
    """Compare the linear-algebra solution space with the span of the families."""
    oracle = enumerate_solution_space(spec, max_degree, alphabet)
    fam = family_basis(spec, max_degree, alphabet)
    ok = all(not spec.defect(r, s) for r, s in fam)
    o_vecs = [_pair_vector(r, s) for r, s in oracle]
    f_vecs = [_pair_vector(r, s) for r, s in fam]
    return CompletenessReport(
        linalg.rank(o_vecs), linalg.rank(f_vecs), linalg.rank(o_vecs + f_vecs), ok
    )
