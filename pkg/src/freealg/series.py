"""Truncated graded series over the free group.

A free-group word is a reduced string in which an uppercase letter is the
inverse of its lowercase letter (``"X" == x^-1``); its degree is the number
of lowercase letters minus the number of uppercase ones.  A
:class:`GradedSeries` keeps finitely many homogeneous components of degree
at least its cutoff; anything below the cutoff is unknown, not zero.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .core import ALPHABET, LinearCombination, NcPoly, Word, check_word, format_coefficient_terms
from .words import require_primitive

GroupWord = str

_INVERSE = str.maketrans(ALPHABET + ALPHABET.upper(), ALPHABET.upper() + ALPHABET)


def group_reduce(raw: str | Iterable[tuple[str, int]]) -> GroupWord:
    """Freely reduce a word given as a string or as ``(letter, +1/-1)`` pairs."""
    if not isinstance(raw, str):
        raw = "".join(ch if sign == 1 else ch.upper() for ch, sign in _check_signed(raw))
    stack: list[str] = []
    for ch in raw:
        if ch.lower() not in ALPHABET:
            raise ValueError(f"invalid group letter {ch!r}")
        if stack and stack[-1] == ch.swapcase():
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def _check_signed(pairs: Iterable[tuple[str, int]]):
    for ch, sign in pairs:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        check_word(ch)
        yield ch, sign


def join(a: GroupWord, b: GroupWord) -> GroupWord:
    """Product of two reduced words; cancellation only happens at the seam."""
    i = 0
    n = min(len(a), len(b))
    while i < n and a[-1 - i] == b[i].swapcase():
        i += 1
    return a[: len(a) - i] + b[i:]


def group_inverse(w: GroupWord) -> GroupWord:
    return w[::-1].translate(_INVERSE)


def group_degree(w: GroupWord) -> int:
    upper = sum(1 for ch in w if ch.isupper())
    return len(w) - 2 * upper


def has_inverse_letter(w: GroupWord) -> bool:
    return any(ch.isupper() for ch in w)


def signed_letters(w: GroupWord) -> list[tuple[str, int]]:
    return [(ch.lower(), -1 if ch.isupper() else 1) for ch in w]


def format_group_word(w: GroupWord) -> str:
    """``"yX" -> "yx^-1"``; runs collapse to powers."""
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        letter = w[i].lower()
        if w[i].isupper():
            out.append(f"{letter}^-{run}")
        elif run == 1:
            out.append(letter)
        else:
            out.append(f"{letter}^{run}")
        i = j
    return "".join(out)


# printing order: degree first, then lexicographic with x > y > ... > x^-1 > y^-1 ...
_ORDER_TABLE = str.maketrans(
    {ch: chr(0x300 - i) for i, ch in enumerate(ALPHABET + ALPHABET.upper())}
)


def group_order_key(w: GroupWord):
    return (group_degree(w), len(w), w.translate(_ORDER_TABLE))


class GroupAlgElem(LinearCombination):
    """Finite rational combination of reduced free-group words."""

    __slots__ = ()
    one_key = ""

    @staticmethod
    def _check_key(k):
        if not isinstance(k, str):
            raise TypeError("group word must be a string")
        r = group_reduce(k)
        if r != k:
            raise ValueError(f"group word {k!r} is not reduced (reduces to {r!r})")
        return k

    @staticmethod
    def _mul_keys(a, b):
        return join(a, b)

    @classmethod
    def word(cls, w: str, c=1) -> "GroupAlgElem":
        return cls({group_reduce(w): c})

    @classmethod
    def from_ncpoly(cls, p: NcPoly) -> "GroupAlgElem":
        return cls._raw(dict(p.items()))

    def _sort_key(self, key):
        return group_order_key(key)

    def _format_key(self, key) -> str:
        return format_group_word(key)

    def __pow__(self, n: int):
        if isinstance(n, int) and n < 0:
            return self.inverse() ** (-n)
        return super().__pow__(n)

    def inverse(self) -> "GroupAlgElem":
        """Inverse of a nonzero monomial ``c w``: ``c^-1 w^-1``."""
        if not self.is_monomial():
            raise ValueError("only single-term elements are invertible here")
        (w, c), = self.items()
        return self._raw({group_inverse(w): 1 / c})

    def is_polynomial(self) -> bool:
        return not any(has_inverse_letter(w) for w in self.support())

    def to_ncpoly(self) -> NcPoly:
        if not self.is_polynomial():
            raise ValueError("element contains inverse letters")
        return NcPoly._raw(dict(self.items()))

    def components(self) -> dict[int, "GroupAlgElem"]:
        comps: dict[int, dict] = {}
        for w, c in self.items():
            comps.setdefault(group_degree(w), {})[w] = c
        return {d: self._raw(t) for d, t in comps.items()}

    def is_homogeneous(self) -> bool:
        return len({group_degree(w) for w in self.support()}) <= 1


def ga_mul(p: GroupAlgElem, q: GroupAlgElem) -> GroupAlgElem:
    return p * q


# --- u a + a u = c --------------------------------------------------------------


@dataclass
class SylvesterResult:
    """Outcome of :func:`sylvester_solve`; ``solution`` is None on failure."""

    solution: GroupAlgElem | None
    rounds: int
    candidates: int
    residual: GroupAlgElem = field(default_factory=GroupAlgElem.zero)

    @property
    def ok(self) -> bool:
        return self.solution is not None


def anticommutator_with(u: GroupWord, a: GroupAlgElem) -> GroupAlgElem:
    uu = GroupAlgElem.word(u)
    return uu * a + a * uu


def sylvester_solve(u: Word, c: GroupAlgElem, cap: int = 8) -> SylvesterResult:
    """Find a finitely supported ``a`` with ``u a + a u = c``.

    Candidates start as ``u^-1 m`` and ``m u^-1`` for ``m`` in the support of
    ``c``; each round solves the exact linear system on the current
    candidates and, if it is inconsistent, adds the same two translates of
    every word the candidates produce outside ``supp(c)``.  Gives up after
    ``cap`` rounds and returns the residual of the last round.
    """
    require_primitive(u)
    if not c:
        return SylvesterResult(GroupAlgElem.zero(), 0, 0)
    if not c.is_homogeneous():
        raise ValueError("c must be homogeneous")
    u_inv = group_inverse(u)
    target = dict(c.items())
    candidates: dict[GroupWord, None] = {}
    frontier = set(target)
    seen = set(frontier)
    residual: dict = target
    for rnd in range(1, cap + 1):
        for m in sorted(frontier, key=group_order_key):
            candidates.setdefault(join(u_inv, m))
            candidates.setdefault(join(m, u_inv))
        words = list(candidates)
        columns = [dict(anticommutator_with(u, GroupAlgElem._raw({w: Fraction(1)})).items()) for w in words]
        sol, residual = linalg.solve(columns, target)
        if sol is not None:
            a = GroupAlgElem({words[j]: v for j, v in sol.items()})
            if anticommutator_with(u, a) != c:
                raise AssertionError("sylvester_solve produced an unverified solution")
            return SylvesterResult(a, rnd, len(words))
        produced = {k for col in columns for k in col}
        frontier = produced - seen
        seen |= frontier
        if not frontier:
            break
    return SylvesterResult(None, rnd, len(candidates), GroupAlgElem._raw(residual))


# --- graded series ------------------------------------------------------------------


class SeriesError(ArithmeticError):
    def __init__(self, message: str, degree: int | None = None):
        super().__init__(message)
        self.degree = degree


@dataclass
class GradedSeries:
    """Homogeneous components ``{degree: GroupAlgElem}`` known exactly down to ``cutoff``."""

    components: dict[int, GroupAlgElem]
    cutoff: int

    def __post_init__(self):
        self.components = {d: c for d, c in self.components.items() if c}
        for d, comp in self.components.items():
            if d < self.cutoff:
                raise ValueError(f"component of degree {d} lies below the cutoff {self.cutoff}")
            if set(comp.components()) != {d}:
                raise ValueError(f"component stored at degree {d} is not homogeneous of that degree")
        if self.components and self.top_degree < self.cutoff:
            raise ValueError("top degree below cutoff")

    @property
    def top_degree(self) -> int:
        if not self.components:
            raise ValueError("empty series has no top degree")
        return max(self.components)

    def degrees(self) -> list[int]:
        return sorted(self.components, reverse=True)

    def total(self) -> GroupAlgElem:
        out = GroupAlgElem.zero()
        for comp in self.components.values():
            out = out + comp
        return out

    def __str__(self) -> str:
        parts = [str(self.components[d]) for d in self.degrees()]
        return " + ".join(f"({p})" for p in parts) + f" + O(deg < {self.cutoff})"


def _graded(elem: GroupAlgElem, at_least: int | None = None) -> dict[int, GroupAlgElem]:
    comps = elem.components()
    if at_least is not None:
        comps = {d: c for d, c in comps.items() if d >= at_least}
    return comps


def series_sqrt(g: NcPoly, u: Word, cutoff: int, cap: int = 8) -> GradedSeries:
    """Square root ``rho = u + a_1 + a_2 + ...`` of ``g`` with top component ``u^2``.

    Every component of ``rho`` is produced by :func:`sylvester_solve` on the
    highest remaining component of ``g - rho^2``.  The result satisfies
    ``rho^2 == g`` in every degree ``>= cutoff``; it therefore keeps the
    components of ``rho`` down to degree ``cutoff - deg(u)``, which is the
    returned series' own cutoff.

    Raises :class:`SeriesError` (with ``.degree``) if a component cannot be
    found with finite support.
    """
    check_word(u)
    require_primitive(u)
    if not g or g.top_component() != NcPoly.word(u * 2):
        raise ValueError("the leading homogeneous component of g must be u^2")
    d = len(u)
    G = GroupAlgElem.from_ncpoly(g)
    rho = {d: GroupAlgElem.word(u)}
    while True:
        current = GroupAlgElem.zero()
        for comp in rho.values():
            current = current + comp
        error = _graded(G - current * current, at_least=cutoff)
        if not error:
            break
        D = max(error)
        result = sylvester_solve(u, error[D], cap=cap)
        if not result.ok:
            raise SeriesError(
                f"no finitely supported component of degree {D - d} found "
                f"({result.candidates} candidates, {result.rounds} rounds)",
                degree=D - d,
            )
        rho[D - d] = rho.get(D - d, GroupAlgElem.zero()) + result.solution
    return GradedSeries(rho, cutoff - d)


def positive_part_certified(rho: GradedSeries, e: int) -> bool:
    """Whether the omitted tail of ``rho`` cannot reach positive degree in ``rho^e``.

    A product with at least one omitted factor has degree at most
    ``(cutoff - 1) + (e - 1) * top``.
    """
    return (rho.cutoff - 1) + (e - 1) * max(rho.top_degree, 0) <= 0


def series_power_positive_part(rho: GradedSeries, e: int) -> dict[int, GroupAlgElem]:
    """All components of strictly positive degree of ``rho^e``."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    if not positive_part_certified(rho, e):
        raise SeriesError(
            f"cutoff too high: {rho.cutoff} > {1 - (e - 1) * rho.top_degree} leaves the positive part of rho^{e} undetermined"
        )
    power = rho.total() ** e
    return {d: c for d, c in sorted(power.components().items(), reverse=True) if d > 0}


def graded_to_elem(parts: Mapping[int, GroupAlgElem] | GroupAlgElem) -> GroupAlgElem:
    if isinstance(parts, GroupAlgElem):
        return parts
    out = GroupAlgElem.zero()
    for comp in parts.values():
        out = out + comp
    return out


def negative_exponent_scan(parts: Mapping[int, GroupAlgElem] | GroupAlgElem, positive_only: bool = True) -> list[GroupWord]:
    """Monomials containing an inverse letter (restricted to positive degree by default)."""
    elem = graded_to_elem(parts)
    hits = [w for w in elem.support() if has_inverse_letter(w) and (not positive_only or group_degree(w) > 0)]
    return sorted(hits, key=group_order_key, reverse=True)


def format_graded(parts: Mapping[int, GroupAlgElem]) -> str:
    return format_coefficient_terms(
        (c, format_group_word(w)) for w, c in graded_to_elem(parts).sorted_terms()
    )
