"""Graded pieces Q[x_{i,r}]^{W_d} in the monomial-symmetric basis."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Mapping, Sequence

from ..errors import DimensionError
from ..quiver import DimVector

Partition = tuple[int, ...]
MultiPartition = tuple[Partition, ...]


@lru_cache(maxsize=None)
def partitions(n: int, max_parts: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n with at most ``max_parts`` parts, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def basis(d: DimVector, j: int) -> tuple[MultiPartition, ...]:
    """Monomial-symmetric basis of degree ``j``: multipartitions with at most d_i
    parts at vertex i, in graded lexicographic order (larger exponents first)."""
    out = []
    for split in _compositions(j, len(d)):
        per_vertex = [partitions(w, n) for w, n in zip(split, d)]
        out.extend(itertools.product(*per_vertex))
    out.sort(key=lambda lam: padded(d, lam), reverse=True)
    return tuple(out)


def _compositions(n: int, k: int):
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def dim_component(d: Sequence[int], j: int) -> int:
    """Number of multipartitions of weight j with at most d_i parts at vertex i."""
    if j < 0:
        return 0
    return len(basis(tuple(d), j))


def padded(d: DimVector, lam: MultiPartition) -> tuple[int, ...]:
    """Exponent vector of the leading monomial of m_lam, vertex blocks concatenated."""
    out: list[int] = []
    for n, part in zip(d, lam):
        out.extend(part)
        out.extend([0] * (n - len(part)))
    return tuple(out)


def multipartition_of(d: DimVector, exponents: Sequence[int]) -> MultiPartition | None:
    """The multipartition indexing ``exponents`` if it is a leading monomial, else None."""
    out = []
    pos = 0
    for n in d:
        block = exponents[pos:pos + n]
        pos += n
        if any(block[k] < block[k + 1] for k in range(n - 1)):
            return None
        out.append(tuple(x for x in block if x))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_symmetric(d: DimVector, lam: MultiPartition) -> dict[tuple[int, ...], int]:
    """Expansion of m_lam as a polynomial in sum(d) variables."""
    blocks = []
    for n, part in zip(d, lam):
        vec = tuple(part) + (0,) * (n - len(part))
        blocks.append(sorted(set(itertools.permutations(vec))))
    return {tuple(itertools.chain.from_iterable(combo)): 1
            for combo in itertools.product(*blocks)}


class SymElement:
    """A homogeneous element of A_d: ``coeffs`` maps multipartitions to rationals."""

    __slots__ = ("d", "degree", "coeffs")

    def __init__(self, d: Sequence[int], degree: int, coeffs: Mapping | None = None):
        self.d = tuple(int(x) for x in d)
        self.degree = int(degree)
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(tuple(int(x) for x in part if x) for part in lam)
            if len(lam) != len(self.d):
                raise DimensionError("multipartition has the wrong number of vertices")
            if any(len(part) > n or list(part) != sorted(part, reverse=True)
                   for part, n in zip(lam, self.d)):
                raise DimensionError(f"{lam} is not a multipartition bounded by {self.d}")
            if sum(map(sum, lam)) != self.degree:
                raise DimensionError(f"{lam} does not have weight {self.degree}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def one(cls, d) -> "SymElement":
        return cls(d, 0, {tuple(() for _ in d): 1})

    @classmethod
    def basis_element(cls, d, lam: MultiPartition) -> "SymElement":
        lam = tuple(tuple(p) for p in lam)
        return cls(d, sum(map(sum, lam)), {lam: 1})

    @classmethod
    def from_poly(cls, d: DimVector, degree: int, poly: Mapping, scale=1) -> "SymElement":
        """Read off the monomial-symmetric coefficients of a W_d-invariant polynomial."""
        coeffs = {}
        for m, c in poly.items():
            lam = multipartition_of(d, m)
            if lam is not None:
                coeffs[lam] = Fraction(c) / scale
        return cls(d, degree, coeffs)

    def to_poly(self) -> tuple[dict[tuple[int, ...], int], int]:
        """Integer polynomial P and integer s with P / s equal to this element."""
        s = lcm(*(c.denominator for c in self.coeffs.values())) if self.coeffs else 1
        out: dict = {}
        for lam, c in self.coeffs.items():
            ci = int(c * s)
            for m in monomial_symmetric(self.d, lam):
                out[m] = out.get(m, 0) + ci
        return out, s

    def vector(self) -> list[Fraction]:
        return [self.coeffs.get(lam, Fraction(0)) for lam in basis(self.d, self.degree)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if self.d != other.d or (self.degree != other.degree and self.coeffs and other.coeffs):
            raise DimensionError("elements live in different graded pieces")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymElement(self.d, self.degree if self.coeffs else other.degree, out)

    def __neg__(self):
        return SymElement(self.d, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return SymElement(self.d, self.degree, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return self.d == other.d
        return (self.d, self.degree, self.coeffs) == (other.d, other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.d, self.degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = " + ".join(f"{c}*m{list(map(list, lam))}" for lam, c in sorted(self.coeffs.items()))
        return f"SymElement(d={self.d}, deg={self.degree}: {terms or '0'})"
