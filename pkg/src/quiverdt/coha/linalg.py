"""Incremental exact row reduction over Q with sparse rows."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class EchelonBasis:
    """Reduced row echelon basis of a growing subspace of Q^ncols.

    Rows are ``{column: value}`` dicts; each row has a pivot entry 1 and every
    other row is zero in that column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def full(self) -> bool:
        return self.rank == self.ncols

    def reduce(self, vec) -> dict[int, Fraction]:
        """Normal form of ``vec`` modulo the span (zero on all pivot columns)."""
        if not isinstance(vec, dict):
            vec = {k: Fraction(c) for k, c in enumerate(vec) if c}
        else:
            vec = {k: Fraction(c) for k, c in vec.items() if c}
        for piv in [k for k in vec if k in self.rows]:
            c = vec.get(piv)
            if not c:
                continue
            for col, val in self.rows[piv].items():
                nv = vec.get(col, 0) - c * val
                if nv:
                    vec[col] = nv
                else:
                    vec.pop(col, None)
        return vec

    def add(self, vec) -> bool:
        """Insert ``vec``; returns True when the rank grew."""
        red = self.reduce(vec)
        if not red:
            return False
        piv = min(red)
        lead = red[piv]
        row = {k: v / lead for k, v in red.items()}
        for other in self.rows.values():
            c = other.get(piv)
            if c:
                for col, val in row.items():
                    nv = other.get(col, 0) - c * val
                    if nv:
                        other[col] = nv
                    else:
                        other.pop(col, None)
        self.rows[piv] = row
        return True

    def extend(self, vecs: Iterable) -> None:
        for v in vecs:
            if self.full:
                return
            self.add(v)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def free_columns(self) -> list[int]:
        return [k for k in range(self.ncols) if k not in self.rows]

    def matrix(self) -> list[list[Fraction]]:
        return [[self.rows[p].get(k, Fraction(0)) for k in range(self.ncols)]
                for p in self.pivots()]
