"""K<X> as a module over K[u1, u2], where u1 multiplies by a primitive
monomial ``u`` on the left and u2 on the right.

Every word factors uniquely as ``u^a t u^b`` with ``u`` neither a prefix nor
a suffix of ``t``.  The generators ``t`` split into the unit (empty word),
free generators, and pairs ``(t1, t2)`` tied by ``t1 u = u t2``.  Canonical
forms use the basis ``u^a t1`` and ``u^b t2 u^c`` for each such pair.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .core import LinearCombination, NcPoly, Word, check_word
from .words import OverlapPair, _overlap_pairs, require_primitive


class UPoly2(LinearCombination):
    """Commutative polynomial in ``u1, u2``; keys are exponent pairs ``(a, b)``."""

    __slots__ = ()
    one_key = (0, 0)

    @staticmethod
    def _check_key(k):
        a, b = k
        if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
            raise ValueError(f"exponents must be nonnegative integers, got {k!r}")
        return (a, b)

    @staticmethod
    def _mul_keys(k1, k2):
        return (k1[0] + k2[0], k1[1] + k2[1])

    @classmethod
    def u1(cls, a: int = 1) -> "UPoly2":
        return cls({(a, 0): 1})

    @classmethod
    def u2(cls, b: int = 1) -> "UPoly2":
        return cls({(0, b): 1})

    @classmethod
    def mono(cls, a: int, b: int, c=1) -> "UPoly2":
        return cls({(a, b): c})

    def _sort_key(self, key):
        return (key[0] + key[1], key[0])

    def _format_key(self, key) -> str:
        parts = []
        for name, e in zip(("u1", "u2"), key):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return " ".join(parts)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("undefined degree of the zero polynomial")
        return max(a + b for a, b in self._terms)

    def is_homogeneous(self) -> bool:
        return len({a + b for a, b in self._terms}) <= 1

    def involves_u2(self) -> bool:
        return any(b for _, b in self._terms)

    def act(self, t: Word, u: Word) -> NcPoly:
        """``sum c_ab u^a t u^b`` in K<X>."""
        return NcPoly._raw({u * a + t + u * b: c for (a, b), c in self._terms.items()})


class GeneratorKind(enum.Enum):
    UNIT = "unit"
    FREE = "free"
    OVERLAP_FIRST = "overlap-first"
    OVERLAP_SECOND = "overlap-second"


@dataclass(frozen=True)
class GeneratorClass:
    kind: GeneratorKind
    word: Word
    pair: OverlapPair | None = None

    @property
    def pair_id(self) -> int | None:
        return None if self.pair is None else self.pair.degree


def factor_monomial(v: Word, u: Word) -> tuple[int, Word, int]:
    """Write ``v = u^a t u^b`` with ``u`` not bordering ``t``; ``a`` is maximized first.

    >>> factor_monomial("xyxyyxyx", "xyx")
    (1, 'yy', 1)
    """
    check_word(v)
    require_primitive(u)
    return _factor(v, u)


def _factor(v: str, u: str) -> tuple[int, str, int]:
    n = len(u)
    a = 0
    while v.startswith(u, a * n):
        a += 1
    rest = v[a * n:]
    b = 0
    while len(rest) - (b + 1) * n >= 0 and rest.endswith(u, 0, len(rest) - b * n):
        b += 1
    return a, rest[: len(rest) - b * n], b


def _classify(t: str, u: str) -> GeneratorClass:
    if not t:
        return GeneratorClass(GeneratorKind.UNIT, t)
    if len(t) < len(u):
        for pair in _overlap_pairs(u):
            if pair.t1 == t:
                return GeneratorClass(GeneratorKind.OVERLAP_FIRST, t, pair)
            if pair.t2 == t:
                return GeneratorClass(GeneratorKind.OVERLAP_SECOND, t, pair)
    return GeneratorClass(GeneratorKind.FREE, t)


def classify_generator(t: Word, u: Word) -> GeneratorClass:
    """Type of the generator ``t`` (as produced by :func:`factor_monomial`)."""
    check_word(t)
    require_primitive(u)
    if t and (t.startswith(u) or t.endswith(u)):
        raise ValueError(f"{t!r} is not a generator: u={u!r} is a prefix or suffix of it")
    return _classify(t, u)


@dataclass
class BimoduleForm:
    """Canonical coordinates of a polynomial over K[u1, u2].

    ``base`` is the K[u] part (a polynomial in u1 only).  ``free_part`` maps
    free generators to coefficients.  ``overlap_part`` maps the degree of an
    overlap pair to ``(c1, c2)``, standing for ``c1 t1 + c2 t2`` with ``c1`` free
    of u2.
    """

    u: Word
    base: UPoly2 = field(default_factory=UPoly2.zero)
    free_part: dict[Word, UPoly2] = field(default_factory=dict)
    overlap_part: dict[int, tuple[UPoly2, UPoly2]] = field(default_factory=dict)

    def pair(self, pair_id: int) -> OverlapPair:
        for p in _overlap_pairs(self.u):
            if p.degree == pair_id:
                return p
        raise KeyError(f"u={self.u!r} has no overlap pair of degree {pair_id}")

    def is_normal(self) -> bool:
        return not self.base.involves_u2() and all(
            not c1.involves_u2() for c1, _ in self.overlap_part.values()
        )

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "base": str(self.base),
            "free": {t: str(c) for t, c in sorted(self.free_part.items())},
            "overlap": {
                str(d): {"t1": self.pair(d).t1, "c1": str(c1), "t2": self.pair(d).t2, "c2": str(c2)}
                for d, (c1, c2) in sorted(self.overlap_part.items())
            },
        }

    def __str__(self) -> str:
        lines = [f"u = {self.u}", f"K[u] part: {self.base}"]
        for t, c in sorted(self.free_part.items()):
            lines.append(f"free {t}: {c}")
        for d, (c1, c2) in sorted(self.overlap_part.items()):
            p = self.pair(d)
            lines.append(f"pair {p.t1}/{p.t2}: ({c1}) t1 + ({c2}) t2")
        return "\n".join(lines)


def to_canonical_bimodule_form(p: NcPoly, u: Word) -> BimoduleForm:
    """Decompose ``p`` over the K[u1, u2]-module generators determined by ``u``."""
    require_primitive(u)
    base: dict = {}
    free: dict[Word, dict] = {}
    overlap: dict[int, tuple[dict, dict]] = {}
    for v, c in p.items():
        a, t, b = _factor(v, u)
        g = _classify(t, u)
        if g.kind is GeneratorKind.UNIT:
            key = (a + b, 0)
            base[key] = base.get(key, 0) + c
        elif g.kind is GeneratorKind.FREE:
            coeffs = free.setdefault(t, {})
            coeffs[(a, b)] = coeffs.get((a, b), 0) + c
        else:
            c1, c2 = overlap.setdefault(g.pair.degree, ({}, {}))
            if g.kind is GeneratorKind.OVERLAP_SECOND:
                key, target = (a, b), c2
            elif b == 0:
                key, target = (a, 0), c1
            else:
                # u^a t1 u^b = u^(a+1) t2 u^(b-1)
                key, target = (a + 1, b - 1), c2
            target[key] = target.get(key, 0) + c
    return BimoduleForm(
        u,
        UPoly2._raw(base),
        {t: UPoly2._raw(c) for t, c in free.items()},
        {d: (UPoly2._raw(c1), UPoly2._raw(c2)) for d, (c1, c2) in overlap.items()},
    )


def from_bimodule_form(bf: BimoduleForm, u: Word | None = None) -> NcPoly:
    """Expand a bimodule form back into K<X>."""
    u = bf.u if u is None else u
    require_primitive(u)
    out = bf.base.act("", u)
    for t, c in bf.free_part.items():
        out = out + c.act(t, u)
    for d, (c1, c2) in bf.overlap_part.items():
        pair = bf.pair(d)
        out = out + c1.act(pair.t1, u) + c2.act(pair.t2, u)
    return out


def basis_count(u: Word, degree: int, alphabet: str = "xy") -> int:
    """Number of canonical basis elements of the given degree.

    Enumerates ``{u^p} + {u^a t u^b : t free} + {u^a t1} + {u^b t2 u^c}`` by
    classifying every candidate generator of each length.
    """
    counts = free_generator_counts(u, degree, alphabet)
    n = len(u)
    total = 1 if degree % n == 0 else 0
    for e, cnt in enumerate(counts):
        if cnt and e <= degree and (degree - e) % n == 0:
            total += cnt * ((degree - e) // n + 1)
    for pair in _overlap_pairs(u):
        rest = degree - pair.degree
        if rest >= 0 and rest % n == 0:
            total += 1 + (rest // n + 1)
    return total


def free_generator_counts(u: Word, max_length: int, alphabet: str = "xy") -> tuple[int, ...]:
    """``counts[e]`` = number of free generators of length ``e`` over ``alphabet``."""
    require_primitive(u)
    return (0,) + tuple(_free_count(u, e, alphabet) for e in range(1, max_length + 1))


@lru_cache(maxsize=1024)
def _free_count(u: Word, e: int, alphabet: str) -> int:
    cnt = 0
    for letters in itertools.product(alphabet, repeat=e):
        t = "".join(letters)
        if t.startswith(u) or t.endswith(u):
            continue
        if _classify(t, u).kind is GeneratorKind.FREE:
            cnt += 1
    return cnt
