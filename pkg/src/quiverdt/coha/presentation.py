"""Quotients of A_d presenting the semistable and stable parts, and what they count.

The semistable quotient kills every product A_p * A_q with p + q = d and
slope(p) > slope(q); the stable quotient also kills same-slope splits. Both
ideals are built directly inside A_d.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..dt import DTResult
from ..errors import ConsistencyError, DimensionError, RangeError, SymmetryError
from ..quiver import DimVector, Quiver, euler_form, hn_shift, hn_types, slope, sub, sub_vectors
from ..ratfunc import HalfPowerRational, minus_v_power
from .linalg import EchelonBasis
from .shuffle import basis_product
from .symmetric import MultiPartition, SymElement, basis, dim_component


def decompositions(theta, d: DimVector, kind: str) -> list[tuple[DimVector, DimVector]]:
    """Pairs (p, q), both non-zero, p + q = d, whose products are killed."""
    out = []
    for p in sub_vectors(d):
        q = sub(d, p)
        if not any(q):
            continue
        mp, mq = slope(theta, p), slope(theta, q)
        if mp > mq or (kind == "st" and mp == mq):
            out.append((p, q))
    return out


def _generators(Q: Quiver, theta, d: DimVector, j: int, kind: str):
    for p, q in decompositions(theta, d, kind):
        total = j + euler_form(Q, p, q)
        for a in range(total + 1):
            for lam in basis(p, a):
                for rho in basis(q, total - a):
                    yield p, lam, q, rho


def _ideal_component(Q: Quiver, theta, d: DimVector, j: int, kind: str, rng=None) -> EchelonBasis:
    cols = {lam: k for k, lam in enumerate(basis(d, j))}
    ech = EchelonBasis(len(cols))
    gens = _generators(Q, theta, d, j, kind)
    if rng is not None:
        gens = list(gens)
        rng.shuffle(gens)
    for p, lam, q, rho in gens:
        if ech.full:
            break
        prod = basis_product(Q, p, lam, q, rho)
        ech.add({cols[mu]: c for mu, c in prod.coeffs.items()})
    return ech


@lru_cache(maxsize=None)
def _cached_component(Q: Quiver, theta: tuple, d: DimVector, j: int, kind: str) -> EchelonBasis:
    return _ideal_component(Q, theta, d, j, kind)


@dataclass(frozen=True)
class QuotientPresentation:
    """Per-degree ideal bases of a quotient of A_d, for degrees 0..jmax."""

    quiver: Quiver
    theta: tuple[int, ...]
    d: DimVector
    jmax: int
    kind: str
    ideals: tuple[EchelonBasis, ...]

    def basis(self, j: int) -> tuple[MultiPartition, ...]:
        return basis(self.d, j)

    def complement(self, j: int) -> list[MultiPartition]:
        """Basis monomials whose classes form a basis of the quotient in degree j."""
        b = basis(self.d, j)
        return [b[k] for k in self.ideals[j].free_columns()]

    def dims(self) -> list[int]:
        return [ech.ncols - ech.rank for ech in self.ideals]

    def ideal_dims(self) -> list[int]:
        return [ech.rank for ech in self.ideals]

    def reduce(self, f: SymElement) -> tuple[Fraction, ...]:
        """Coordinates of the class of ``f`` in the complement basis."""
        if f.d != self.d:
            raise DimensionError(f"element lives over {f.d}, presentation over {self.d}")
        if f.is_zero():
            if 0 <= f.degree <= self.jmax:
                return (Fraction(0),) * self.dims()[f.degree]
            return ()
        if not 0 <= f.degree <= self.jmax:
            raise RangeError(f"degree {f.degree} outside 0..{self.jmax}")
        ech = self.ideals[f.degree]
        cols = {lam: k for k, lam in enumerate(basis(self.d, f.degree))}
        red = ech.reduce({cols[lam]: c for lam, c in f.coeffs.items()})
        return tuple(red.get(k, Fraction(0)) for k in ech.free_columns())


def _presentation(Q, theta, d, jmax, kind, rng=None) -> QuotientPresentation:
    d = Q.check(d)
    theta = tuple(int(t) for t in theta)
    if jmax < 0:
        raise RangeError("jmax must be non-negative")
    if rng is None:
        ideals = tuple(_cached_component(Q, theta, d, j, kind) for j in range(jmax + 1))
    else:
        ideals = tuple(_ideal_component(Q, theta, d, j, kind, rng) for j in range(jmax + 1))
    return QuotientPresentation(Q, theta, d, jmax, kind, ideals)


def sst_presentation(Q: Quiver, theta: Sequence[int], d, jmax: int,
                     rng: random.Random | None = None) -> QuotientPresentation:
    """Quotient of A_d by products over slope-forbidden splits."""
    return _presentation(Q, theta, d, jmax, "sst", rng)


def st_presentation(Q: Quiver, theta: Sequence[int], d, jmax: int,
                    rng: random.Random | None = None) -> QuotientPresentation:
    """Quotient of A_d by products over all splits with slope(p) >= slope(q)."""
    return _presentation(Q, theta, d, jmax, "st", rng)


def sst_reduce(pres: QuotientPresentation, f: SymElement) -> tuple[Fraction, ...]:
    return pres.reduce(f)


def chow_betti_dt(Q: Quiver, theta: Sequence[int], d, jmax: int | None = None) -> DTResult:
    """Omega-tilde_d(q) = (1 - q) * (Poincare series of the stable quotient)."""
    if not Q.is_symmetric:
        raise SymmetryError("Chow-Betti numbers give DT invariants for symmetric quivers only")
    d = Q.check(d)
    chi = euler_form(Q, d, d)
    need = max(2 - chi, 0)
    if jmax is None:
        jmax = need
    if jmax < need:
        raise RangeError(f"jmax={jmax} too small; need at least {need}")
    dims = st_presentation(Q, theta, d, jmax).dims()
    coeffs = [dims[j] - (dims[j - 1] if j else 0) for j in range(jmax + 1)]
    top = 1 - chi  # dimension of the stable moduli space
    if any(coeffs[j] for j in range(max(top + 1, 0), jmax + 1)):
        raise ConsistencyError(f"stable Poincare series at d={d} does not stabilize: {dims}")
    return DTResult.from_polynomial(d, coeffs[:max(top + 1, 0)], chi)


def poincare_contribution(Q: Quiver, d, dims: Sequence[int]) -> HalfPowerRational:
    """(-v)^chi(d,d) * sum_j dims[j] q^j, the t^d term of the bigraded Hilbert series."""
    chi = euler_form(Q, Q.check(d), d)
    poly = HalfPowerRational.from_laurent({2 * j: c for j, c in enumerate(dims) if c})
    return minus_v_power(chi) * poly


def _convolve(lists: list[list[int]], total: int) -> int:
    acc = [1] + [0] * total
    for dims in lists:
        new = [0] * (total + 1)
        for a, x in enumerate(acc):
            if x:
                for b in range(total + 1 - a):
                    if b < len(dims):
                        new[a + b] += x * dims[b]
        acc = new
    return acc[total]


def tensor_check(Q: Quiver, theta: Sequence[int], d, jmax: int) -> bool:
    """Graded dimensions of A_d against the HN-ordered tensor products of semistable parts."""
    d = Q.check(d)
    theta = tuple(int(t) for t in theta)
    types = hn_types(Q, theta, d)
    for j in range(jmax + 1):
        rhs = 0
        for hn in types:
            total = j + hn_shift(Q, hn)
            if total < 0:
                continue
            rhs += _convolve([sst_presentation(Q, theta, part, total).dims() for part in hn],
                             total)
        if rhs != dim_component(d, j):
            return False
    return True
