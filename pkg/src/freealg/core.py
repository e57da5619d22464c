"""Exact arithmetic in the free associative algebra over the rationals.

Words (monomials of the free monoid) are plain Python strings of lowercase
letters; the empty string is the identity monomial.  Polynomials map words
to nonzero :class:`fractions.Fraction` coefficients.

    >>> x, y = NcPoly.word("x"), NcPoly.word("y")
    >>> print(commutator(x, y))
    xy - yx
"""

from __future__ import annotations

import string
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Any, NamedTuple

Word = str

ALPHABET = string.ascii_lowercase


def coerce_scalar(c: Any) -> Fraction:
    """Return ``c`` as a Fraction; floats and other inexact types are refused."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


def check_word(w: Any) -> Word:
    if not isinstance(w, str):
        raise TypeError(f"word must be a string of letters, got {type(w).__name__}")
    for ch in w:
        if ch not in ALPHABET:
            raise ValueError(f"invalid letter {ch!r} in word {w!r}")
    return w


class MonomialOrder:
    """Degree-lexicographic order on words.

    ``precedence`` lists letters from largest to smallest; letters not listed
    rank below the listed ones in alphabetical order.  The default makes
    ``x > y``.
    """

    def __init__(self, precedence: str = ALPHABET):
        if len(set(precedence)) != len(precedence):
            raise ValueError("letter precedence must not repeat letters")
        check_word(precedence)
        full = precedence + "".join(ch for ch in ALPHABET if ch not in precedence)
        self.precedence = precedence
        # higher precedence -> larger code point, so plain string comparison works
        self._table = str.maketrans({ch: chr(0x200 - i) for i, ch in enumerate(full)})

    def key(self, w: Word) -> tuple[int, str]:
        return (len(w), w.translate(self._table))

    def less(self, a: Word, b: Word) -> bool:
        return self.key(a) < self.key(b)

    def max(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialOrder) and other._table == self._table

    def __hash__(self) -> int:
        return hash(self.precedence)

    def __repr__(self) -> str:
        return f"MonomialOrder({self.precedence!r})"


DEGLEX = MonomialOrder()


def format_coefficient_terms(pairs: Iterable[tuple[Fraction, str]]) -> str:
    """Join ``(coefficient, monomial_text)`` pairs; an empty monomial text is the unit."""
    out = []
    for c, mono in pairs:
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag} {mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out) or "0"


def format_word(w: Word) -> str:
    """Print a word with runs of a repeated letter collapsed to powers: ``xxy -> x^2y``."""
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "".join(out)


class LinearCombination:
    """Finite map from monomial keys to nonzero rationals, closed under the
    ring operations given by :meth:`_mul_keys`.

    Subclasses fix the key type, the product of two keys and the identity key.
    Values are immutable; every operation returns a new object.
    """

    __slots__ = ("_terms", "_hash")

    one_key: Any = None

    def __init__(self, terms: Mapping | Iterable | None = None):
        clean: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                k = self._check_key(k)
                c = coerce_scalar(c)
                clean[k] = clean.get(k, 0) + c
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in terms.items() if c}
        obj._hash = None
        return obj

    @staticmethod
    def _check_key(k):
        return k

    @staticmethod
    def _mul_keys(a, b):
        raise NotImplementedError

    @classmethod
    def constant(cls, c=1):
        return cls._raw({cls.one_key: coerce_scalar(c)})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def monomial(cls, key, c=1):
        return cls({key: c})

    # mapping-ish access
    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coeff(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # arithmetic
    def _lift(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.constant(other) if other else self.zero()
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "LinearCombination":
        c = coerce_scalar(c)
        return self._raw({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        mk = self._mul_keys
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = mk(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return self._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(1 / coerce_scalar(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # printing
    def _sort_key(self, key):
        return key

    def _format_key(self, key) -> str:
        return str(key)

    def sorted_terms(self) -> list:
        """Terms as ``(key, coefficient)`` pairs, largest key first."""
        return sorted(self._terms.items(), key=lambda kc: self._sort_key(kc[0]), reverse=True)

    def __str__(self) -> str:
        return format_coefficient_terms(
            (c, "" if k == self.one_key else self._format_key(k)) for k, c in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class NcPoly(LinearCombination):
    """Element of the free associative algebra K<X> with rational coefficients."""

    __slots__ = ()
    one_key = ""

    @staticmethod
    def _check_key(k):
        return check_word(k)

    @staticmethod
    def _mul_keys(a, b):
        return a + b

    @classmethod
    def word(cls, w: Word, c=1) -> "NcPoly":
        return cls({w: c})

    def _sort_key(self, key):
        return DEGLEX.key(key)

    def _format_key(self, key) -> str:
        return format_word(key)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("undefined degree of the zero polynomial")
        return max(len(w) for w in self._terms)

    def component(self, d: int) -> "NcPoly":
        """Homogeneous component of degree ``d`` (possibly zero)."""
        return self._raw({w: c for w, c in self._terms.items() if len(w) == d})

    def components(self) -> dict[int, "NcPoly"]:
        comps: dict[int, dict] = {}
        for w, c in self._terms.items():
            comps.setdefault(len(w), {})[w] = c
        return {d: self._raw(t) for d, t in comps.items()}

    def top_component(self) -> "NcPoly":
        return self.component(self.degree)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def leading_term(self, order: MonomialOrder = DEGLEX) -> tuple[Word, Fraction]:
        if not self._terms:
            raise ValueError("undefined degree of the zero polynomial")
        w = order.max(self._terms)
        return w, self._terms[w]

    def leading_word(self, order: MonomialOrder = DEGLEX) -> Word:
        return self.leading_term(order)[0]

    def letters(self) -> set[str]:
        return {ch for w in self._terms for ch in w}

    def sorted_terms(self, order: MonomialOrder = DEGLEX) -> list:
        return sorted(self._terms.items(), key=lambda wc: order.key(wc[0]), reverse=True)


def word_poly(w: Word, c=1) -> NcPoly:
    return NcPoly.word(w, c)


def nc_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q


def commutator(p: NcPoly, q: NcPoly) -> NcPoly:
    """``[p, q] = pq - qp``."""
    return p * q - q * p


class DegreeSplit(NamedTuple):
    degree: int
    leading_component: NcPoly
    leading_term: tuple[Word, Fraction]


def degree_split(p: NcPoly, order: MonomialOrder = DEGLEX) -> DegreeSplit:
    """Degree, top homogeneous component and leading term of a nonzero polynomial."""
    d = p.degree
    return DegreeSplit(d, p.component(d), p.leading_term(order))


def compose(p: NcPoly, f: NcPoly, g: NcPoly, letters: str = "xy") -> NcPoly:
    """Evaluate ``p(f, g)``: substitute ``f`` for ``letters[0]`` and ``g`` for ``letters[1]``."""
    first, second = letters
    extra = p.letters() - {first, second}
    if extra:
        raise ValueError(f"p may only use the letters {first!r}, {second!r}; found {sorted(extra)}")
    images = {first: f, second: g}
    out = NcPoly.zero()
    for w, c in p.items():
        term = NcPoly.constant(c)
        for ch in w:
            term = term * images[ch]
        out = out + term
    return out


def weighted_degree(p: NcPoly, weights: Mapping[str, int]) -> int:
    """Largest weighted length of a word of ``p``, with letter weights ``weights``."""
    if not p:
        raise ValueError("undefined degree of the zero polynomial")
    return max(sum(weights[ch] for ch in w) for w in p.support())
