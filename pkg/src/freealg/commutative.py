"""Commutative polynomials in x, y and a pair with Jacobian J(f, g) = y.

For ``a > b`` with ``c = a - b > 1`` dividing ``a + 1`` and ``k = (a + 1) / c``
the pair is ``f = y p(x^a y^b)``, ``g = x y (1 + x^a y^b)`` where ``p`` has
degree ``k`` and solves ``-(1 + k c z) p(z) + c z (1 + z) p'(z) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import LinearCombination


class CommPoly(LinearCombination):
    """Polynomial in commuting ``x, y``; keys are exponent pairs ``(i, j)``."""

    __slots__ = ()
    one_key = (0, 0)

    @staticmethod
    def _check_key(k):
        i, j = k
        if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
            raise ValueError(f"exponents must be nonnegative integers, got {k!r}")
        return (i, j)

    @staticmethod
    def _mul_keys(k1, k2):
        return (k1[0] + k2[0], k1[1] + k2[1])

    @classmethod
    def x(cls, i: int = 1) -> "CommPoly":
        return cls({(i, 0): 1})

    @classmethod
    def y(cls, j: int = 1) -> "CommPoly":
        return cls({(0, j): 1})

    def _sort_key(self, key):
        return (key[0] + key[1], key[0])

    def _format_key(self, key) -> str:
        out = []
        for name, e in zip("xy", key):
            if e == 1:
                out.append(name)
            elif e:
                out.append(f"{name}^{e}")
        return "".join(out)


    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("undefined degree of the zero polynomial")
        return max(i + j for i, j in self._terms)

    def diff(self, var: str) -> "CommPoly":
        idx = "xy".index(var)
        out = {}
        for (i, j), c in self.items():
            e = (i, j)[idx]
            if e:
                key = (i - 1, j) if idx == 0 else (i, j - 1)
                out[key] = c * e
        return self._raw(out)

    def substitute_monomial(self, a: int, b: int) -> "CommPoly":
        """Treat ``self`` as a polynomial in ``x`` alone and substitute ``x -> x^a y^b``."""
        if any(j for _, j in self._terms):
            raise ValueError("substitute_monomial expects a polynomial in x only")
        return self._raw({(a * i, b * i): c for (i, _), c in self.items()})


def jacobian(f: CommPoly, g: CommPoly) -> CommPoly:
    """``df/dx dg/dy - df/dy dg/dx``."""
    return f.diff("x") * g.diff("y") - f.diff("y") * g.diff("x")


def wedge_degree(f: CommPoly, g: CommPoly) -> int:
    """Degree of the 2-form ``df ^ dg``, which is ``deg J(f, g) + 2``."""
    return jacobian(f, g).degree + 2


@dataclass(frozen=True)
class MLParams:
    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int)) or b < 1 or a <= b:
            raise ValueError(f"need positive integers a > b, got a={a!r}, b={b!r}")
        if a - b <= 1:
            raise ValueError(f"need a - b > 1, got a - b = {a - b}")
        if (a + 1) % (a - b):
            raise ValueError(f"a - b = {a - b} must divide a + 1 = {a + 1}")

    @property
    def c(self) -> int:
        return self.a - self.b

    @property
    def k(self) -> int:
        return (self.a + 1) // self.c


def ml_coefficients(params: MLParams) -> list[Fraction]:
    """``[p_1, ..., p_k]`` of ``p(z) = -1 + p_1 z + ... + p_k z^k``.

    Matching the coefficient of ``z^i`` in the differential identity gives
    ``(i c - 1) p_i = c (k - i + 1) p_(i-1)`` with ``p_0 = -1``.
    """
    c, k = params.c, params.k
    coeffs = []
    prev = Fraction(-1)
    for i in range(1, k + 1):
        prev = Fraction(c * (k - i + 1), i * c - 1) * prev
        coeffs.append(prev)
    return coeffs


def ml_polynomial(params: MLParams) -> CommPoly:
    """``p(z)`` written in the variable ``x``."""
    return CommPoly({(i, 0): c for i, c in enumerate([Fraction(-1)] + ml_coefficients(params))})


def ml_identity_defect(params: MLParams, p: CommPoly | None = None) -> CommPoly:
    """``-(1 + kcz) p + c z (1 + z) p' - 1`` with ``z`` written as ``x``."""
    p = ml_polynomial(params) if p is None else p
    c, k = params.c, params.k
    z = CommPoly.x()
    return -(1 + z * (k * c)) * p + z * (1 + z) * p.diff("x") * c - 1


def build_ml_example(params: MLParams) -> tuple[CommPoly, CommPoly]:
    z = CommPoly({(params.a, params.b): 1})
    f = CommPoly.y() * ml_polynomial(params).substitute_monomial(params.a, params.b)
    g = CommPoly.x() * CommPoly.y() * (1 + z)
    return f, g


def verify_ml_example(params: MLParams) -> dict:
    """Degrees, Jacobian, and the exact checks for one parameter choice."""
    f, g = build_ml_example(params)
    J = jacobian(f, g)
    a, b, c = params.a, params.b, params.c
    coeffs = ml_coefficients(params)
    report = {
        "a": a, "b": b, "c": c, "k": params.k,
        "p": [str(x) for x in coeffs],
        "deg_f": f.degree,
        "deg_g": g.degree,
        "jacobian": str(J),
        "deg_J": J.degree if J else None,
        "deg_wedge": J.degree + 2 if J else None,
        "identity_holds": not ml_identity_defect(params),
        "all_coefficients_nonzero": all(coeffs),
        "jacobian_is_y": J == CommPoly.y(),
        "deg_f_formula": Fraction((a + b + 2) * a, c),
        "deg_g_formula": a + b + 2,
    }
    report["passed"] = (
        report["identity_holds"]
        and report["all_coefficients_nonzero"]
        and report["jacobian_is_y"]
        and report["deg_f"] == report["deg_f_formula"]
        and report["deg_g"] == report["deg_g_formula"]
        and report["deg_wedge"] == 3
    )
    return report
