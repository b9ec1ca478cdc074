"""Quivers, dimension vectors, stabilities and Harder-Narasimhan types.

Dimension vectors and stabilities are plain tuples of ints indexed by vertex
position; slopes are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DimensionError, ZeroVectorError

DimVector = tuple[int, ...]
Stability = tuple[int, ...]
HNType = tuple[DimVector, ...]


@dataclass(frozen=True)
class Quiver:
    """A quiver given by its arrow-multiplicity matrix ``arrows[i][j]`` (i -> j)."""

    arrows: tuple[tuple[int, ...], ...]
    vertices: tuple[str, ...] = field(default=())

    def __post_init__(self):
        arrows = tuple(tuple(int(a) for a in row) for row in self.arrows)
        n = len(arrows)
        if any(len(row) != n for row in arrows):
            raise DimensionError("arrow matrix must be square")
        if any(a < 0 for row in arrows for a in row):
            raise DimensionError("arrow multiplicities must be non-negative")
        object.__setattr__(self, "arrows", arrows)
        vertices = tuple(str(v) for v in self.vertices) or tuple(str(i) for i in range(n))
        if len(vertices) != n:
            raise DimensionError("vertex list does not match arrow matrix")
        object.__setattr__(self, "vertices", vertices)

    @property
    def n(self) -> int:
        return len(self.arrows)

    @property
    def is_symmetric(self) -> bool:
        return all(self.arrows[i][j] == self.arrows[j][i]
                   for i in range(self.n) for j in range(i))

    def arrow_list(self) -> list[tuple[int, int]]:
        """All arrows as (source, target), repeated by multiplicity, in row-major order."""
        return [(i, j) for i in range(self.n) for j in range(self.n)
                for _ in range(self.arrows[i][j])]

    def zero(self) -> DimVector:
        return (0,) * self.n

    def check(self, d: Sequence[int]) -> DimVector:
        d = tuple(int(x) for x in d)
        if len(d) != self.n:
            raise DimensionError(f"expected {self.n} entries, got {len(d)}")
        if any(x < 0 for x in d):
            raise DimensionError("dimension vectors are non-negative")
        return d


def loop_quiver(m: int) -> Quiver:
    """One vertex with ``m`` loops (L_m)."""
    return Quiver(((m,),))


def kronecker_quiver(m: int = 2) -> Quiver:
    return Quiver(((0, m), (0, 0)), ("i", "j"))


def bipartite_symmetric_quiver(n: int) -> Quiver:
    """Two vertices with ``n`` arrows in each direction; n = 1 is the two-cycle quiver."""
    return Quiver(((0, n), (n, 0)), ("i", "j"))


def two_cycle_quiver() -> Quiver:
    return bipartite_symmetric_quiver(1)


def euler_form(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    d, e = Q.check(d), Q.check(e)
    a = Q.arrows
    return (sum(x * y for x, y in zip(d, e))
            - sum(a[i][j] * d[i] * e[j] for i in range(Q.n) for j in range(Q.n)))


def antisym_form(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    return euler_form(Q, d, e) - euler_form(Q, e, d)


def slope(theta: Sequence[int], d: Sequence[int]) -> Fraction:
    if len(theta) != len(d):
        raise DimensionError("stability and dimension vector differ in length")
    total = sum(d)
    if total == 0:
        raise ZeroVectorError("slope is undefined for the zero vector")
    return Fraction(sum(t * x for t, x in zip(theta, d)), total)


def add(d: DimVector, e: DimVector) -> DimVector:
    return tuple(x + y for x, y in zip(d, e))


def sub(d: DimVector, e: DimVector) -> DimVector:
    return tuple(x - y for x, y in zip(d, e))


def leq(d: Sequence[int], e: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(d, e))


def box_vectors(box: Sequence[int], nonzero: bool = False) -> Iterator[DimVector]:
    """All vectors componentwise below ``box``, ordered by total size then lexicographically."""
    vecs = sorted(itertools.product(*(range(b + 1) for b in box)),
                  key=lambda v: (sum(v), v))
    for v in vecs:
        if nonzero and not any(v):
            continue
        yield v


def sub_vectors(d: DimVector) -> Iterator[DimVector]:
    """Non-zero vectors e <= d, including d itself, in lexicographic order."""
    for e in itertools.product(*(range(x + 1) for x in d)):
        if any(e):
            yield e


@lru_cache(maxsize=None)
def _hn_types(theta: Stability, d: DimVector, bound: Fraction | None) -> tuple[HNType, ...]:
    # HN types of d whose first slope is strictly below ``bound``.
    out = []
    mu_d = slope(theta, d)
    for first in sub_vectors(d):
        mu = slope(theta, first)
        if bound is not None and mu >= bound:
            continue
        rest = sub(d, first)
        if not any(rest):
            out.append((first,))
            continue
        # slopes decrease, so the first part of a multi-part type is above mu(d)
        if mu <= mu_d:
            continue
        for tail in _hn_types(theta, rest, mu):
            out.append((first,) + tail)
    return tuple(sorted(out))


def hn_types(Q: Quiver, theta: Sequence[int], d: Sequence[int]) -> list[HNType]:
    """All Harder-Narasimhan types of ``d``: ordered decompositions into non-zero
    parts of strictly decreasing slope, including the singleton ``(d,)``."""
    d = Q.check(d)
    theta = tuple(int(t) for t in theta)
    if len(theta) != Q.n:
        raise DimensionError("stability has wrong length")
    if not any(d):
        raise ZeroVectorError("HN types of the zero vector are undefined")
    return list(_hn_types(theta, d, None))


def hn_shift(Q: Quiver, hn_type: Sequence[Sequence[int]]) -> int:
    """Sum of Euler forms chi(d^r, d^s) over r < s."""
    parts = list(hn_type)
    return sum(euler_form(Q, parts[r], parts[s])
               for r in range(len(parts)) for s in range(r + 1, len(parts)))


@dataclass(frozen=True)
class Genericity:
    """Outcome of a genericity test; only vectors inside ``box`` were inspected."""

    generic: bool
    box: DimVector
    box_limited: bool = True
    witness: tuple[DimVector, DimVector] | None = None

    def __bool__(self):
        return self.generic


def is_mu_generic(Q: Quiver, theta: Sequence[int], mu, box: Sequence[int]) -> Genericity:
    box = Q.check(box)
    if Q.is_symmetric:
        return Genericity(True, box, box_limited=False)
    mu = Fraction(mu)
    on_slope = [d for d in box_vectors(box, nonzero=True) if slope(theta, d) == mu]
    for d, e in itertools.combinations(on_slope, 2):
        if antisym_form(Q, d, e) != 0:
            return Genericity(False, box, witness=(d, e))
    return Genericity(True, box)


def parse_slope(text: str) -> Fraction:
    """Parse "p/r" or an integer into a reduced fraction."""
    return Fraction(text.strip())
