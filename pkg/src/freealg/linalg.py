"""Sparse exact linear algebra over the rationals.

Vectors are dicts from arbitrary hashable keys to Fractions.  The systems
met here are tall, very sparse and small in column count, which is why this
works column by column instead of on a dense matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence

Vector = dict


class Echelon:
    """Incremental column echelon form that remembers how each pivot row was built."""

    def __init__(self):
        self.pivots: list[tuple[Hashable, Vector, Vector]] = []  # (pivot key, vector, combination)
        self.kernel: list[Vector] = []

    def reduce(self, vec: Mapping, comb: Mapping | None = None) -> tuple[Vector, Vector]:
        v = {k: c for k, c in vec.items() if c}
        comb = dict(comb or {})
        for key, pv, pc in self.pivots:
            c = v.get(key)
            if not c:
                continue
            factor = c / pv[key]
            for k, x in pv.items():
                y = v.get(k, 0) - factor * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
            for k, x in pc.items():
                y = comb.get(k, 0) - factor * x
                if y:
                    comb[k] = y
                else:
                    comb.pop(k, None)
        return v, comb

    def add_column(self, index: Hashable, vec: Mapping) -> bool:
        """Insert a column; returns False (and records a kernel vector) if it is dependent."""
        v, comb = self.reduce(vec, {index: Fraction(1)})
        if not v:
            self.kernel.append(comb)
            return False
        key = min(v, key=repr)
        self.pivots.append((key, v, comb))
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(vectors: Sequence[Mapping]) -> int:
    ech = Echelon()
    for i, v in enumerate(vectors):
        ech.add_column(i, v)
    return ech.rank


def nullspace(columns: Sequence[Mapping]) -> list[Vector]:
    """Basis of ``{lam : sum_j lam[j] * columns[j] == 0}`` as dicts ``j -> lam_j``."""
    ech = Echelon()
    for j, col in enumerate(columns):
        ech.add_column(j, col)
    return ech.kernel


def solve(columns: Sequence[Mapping], rhs: Mapping) -> tuple[Vector | None, Vector]:
    """One solution ``lam`` of ``sum_j lam[j] columns[j] == rhs`` and the residual.

    The residual is ``rhs`` reduced against the column span; it is empty exactly
    when the system is consistent.
    """
    ech = Echelon()
    for j, col in enumerate(columns):
        ech.add_column(j, col)
    residual, comb = ech.reduce(rhs)
    if residual:
        return None, residual
    # rhs - sum(comb) == 0 in the reduced sense: comb holds the negated coordinates
    return {j: -c for j, c in comb.items()}, residual
