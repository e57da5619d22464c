"""Combinatorics on words: primitive roots, self-overlaps, n-th roots and
composite detection for polynomials of the free algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .core import DEGLEX, MonomialOrder, NcPoly, Word, check_word


class PrimitiveDecomposition(NamedTuple):
    root: Word
    exponent: int


def failure_function(w: Word) -> list[int]:
    """KMP prefix function: ``pi[i]`` is the longest proper border of ``w[:i+1]``."""
    pi = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = pi[k - 1]
        if w[i] == w[k]:
            k += 1
        pi[i] = k
    return pi


def primitive_root(w: Word) -> PrimitiveDecomposition:
    """Unique primitive ``z`` and ``e >= 1`` with ``w == z * e``.

    >>> primitive_root("xyxy")
    PrimitiveDecomposition(root='xy', exponent=2)
    """
    check_word(w)
    if not w:
        raise ValueError("the empty word has no primitive root")
    p = len(w) - failure_function(w)[-1]
    if len(w) % p:
        p = len(w)
    return PrimitiveDecomposition(w[:p], len(w) // p)


def is_primitive(w: Word) -> bool:
    return primitive_root(w).exponent == 1


def require_primitive(u: Word) -> None:
    if not u or not is_primitive(u):
        raise ValueError(f"u must be primitive, got {u!r}")


@dataclass(frozen=True)
class OverlapPair:
    """Words with ``t1 + u == u + t2``, where ``u == (v1 + v2) * K + v1``,
    ``t1 == (v1 + v2) * j`` and ``t2 == (v2 + v1) * j``."""

    t1: Word
    t2: Word
    v1: Word
    v2: Word
    j: int

    @property
    def degree(self) -> int:
        return len(self.t1)


@lru_cache(maxsize=256)
def _overlap_pairs(u: Word) -> tuple[OverlapPair, ...]:
    pairs = []
    for d in range(1, len(u)):
        t1, t2 = u[:d], u[-d:]
        if t1 + u != u + t2:
            continue
        z, j = primitive_root(t1)
        # u has period len(z); len(u) % len(z) != 0 since u is primitive
        v1 = u[: len(u) % len(z)]
        v2 = z[len(v1):]
        pairs.append(OverlapPair(t1, t2, v1, v2, j))
    return tuple(pairs)


def overlap_pairs(u: Word) -> list[OverlapPair]:
    """All pairs (proper prefix t1, proper suffix t2) with ``t1 u = u t2``, by degree."""
    check_word(u)
    require_primitive(u)
    return list(_overlap_pairs(u))


class NthRoot(NamedTuple):
    root: NcPoly
    scale: Fraction  # root ** n == scale * h


def _coefficient_root(h: NcPoly, n: int, order: MonomialOrder) -> NcPoly | None:
    """Monic ``b`` with ``b**n == h / lc(h)`` for homogeneous nonzero ``h``."""
    lead, lc = h.leading_term(order)
    if len(lead) % n:
        return None
    d = len(lead) // n
    top = lead[:d]
    if top * n != lead:
        return None
    # the block decomposition of top^(n-1) w is unique, so its coefficient in b^n is b[w]
    prefix = top * (n - 1)
    terms = {w[len(prefix):]: c / lc for w, c in h.items() if w.startswith(prefix)}
    b = NcPoly(terms)
    if b ** n != h / lc:
        return None
    return b


def homogeneous_nth_root(h: NcPoly, n: int, order: MonomialOrder = DEGLEX) -> NthRoot | None:
    """Monic n-th root of a homogeneous polynomial, up to the stated scalar.

    Returns ``NthRoot(b, alpha)`` with ``b ** n == alpha * h`` and ``b`` monic, or
    ``None`` when no such ``b`` exists (including when ``n`` does not divide
    ``deg h``).
    """
    if not h:
        raise ValueError("cannot take a root of the zero polynomial")
    if not h.is_homogeneous():
        raise ValueError("h must be homogeneous")
    if n < 1:
        raise ValueError("n must be a positive integer")
    b = _coefficient_root(h, n, order)
    if b is None:
        return None
    return NthRoot(b, 1 / h.leading_term(order)[1])


def _power_linearization(top_powers: list[NcPoly], x: NcPoly) -> NcPoly:
    n = len(top_powers)
    out = NcPoly.zero()
    for i in range(n):
        out = out + top_powers[i] * x * top_powers[n - 1 - i]
    return out


def _solve_linearized(top: NcPoly, n: int, rhs: NcPoly, e: int, order: MonomialOrder) -> NcPoly | None:
    """Solve ``sum_i top^i x top^(n-1-i) == rhs`` for ``x`` homogeneous of degree ``e``.

    The leading word of the left side is the largest of ``L^i w L^(n-1-i)`` over
    ``i``, where ``L``/``w`` are the leading words of ``top``/``x``; that map is
    strictly increasing in ``w``, so the leading words of ``x`` are peeled off
    ``rhs`` one at a time.
    """
    lead, lc = top.leading_term(order)
    d = len(lead)
    powers = [top ** i for i in range(n)]
    lc_factor = lc ** (n - 1)

    def images(w: Word) -> list[Word]:
        return [lead * i + w + lead * (n - 1 - i) for i in range(n)]

    x = NcPoly.zero()
    residual = rhs
    while residual:
        target, c = residual.leading_term(order)
        found = None
        for i in range(n):
            w = target[i * d: i * d + e]
            imgs = images(w)
            if order.max(imgs) == target:
                found = w, imgs.count(target)
                break
        if found is None:
            return None
        w, count = found
        term = NcPoly.word(w, c / (count * lc_factor))
        x = x + term
        residual = residual - _power_linearization(powers, term)
    return x


def _express_as_polynomial_in(f: NcPoly, h: NcPoly, order: MonomialOrder) -> tuple[Fraction, ...] | None:
    """Coefficients ``q`` (lowest first) with ``f == sum q[i] h^i``, or None."""
    d = h.degree
    coeffs: dict[int, Fraction] = {}
    rem = f
    while rem:
        deg = rem.degree
        if deg % d:
            return None
        i = deg // d
        hp = h ** i
        w, c = rem.leading_term(order)
        hw, hc = hp.leading_term(order)
        if w != hw or i in coeffs:
            return None
        coeffs[i] = c / hc
        rem = rem - hp * coeffs[i]
    top = max(coeffs)
    return tuple(coeffs.get(i, Fraction(0)) for i in range(top + 1))


def evaluate_univariate(q, h: NcPoly) -> NcPoly:
    """``q(h)`` for a coefficient sequence ``q`` (constant term first)."""
    out = NcPoly.zero()
    power = NcPoly.constant(1)
    for c in q:
        out = out + power * c
        power = power * h
    return out


class Composite(NamedTuple):
    h: NcPoly
    q: tuple[Fraction, ...]  # f == q(h), constant term first


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def proper_composite_test(f: NcPoly, order: MonomialOrder = DEGLEX) -> Composite | None:
    """Find ``f = q(h)`` with ``deg h < deg f``, if such a decomposition exists.

    ``h`` is normalized to be monic with zero constant term, which makes it
    unique for each candidate degree.  Divisors ``n`` of ``deg f`` are tried
    from largest to smallest, so the first witness has the smallest ``h``.
    """
    if not f or f.degree == 0:
        raise ValueError("f must be nonconstant")
    D = f.degree
    f_top = f.component(D)
    for n in sorted((n for n in _divisors(D) if n > 1), reverse=True):
        d = D // n
        root = homogeneous_nth_root(f_top, n, order)
        if root is None:
            continue
        qn = 1 / root.scale
        top = root.root
        h = top
        for j in range(1, d):
            rhs = (f - (h ** n) * qn).component(D - j) / qn
            x = _solve_linearized(top, n, rhs, d - j, order)
            if x is None:
                break
            h = h + x
        else:
            q = _express_as_polynomial_in(f, h, order)
            if q is not None:
                return Composite(h, q)
    return None
