"""Brute-force point counts of semistable representations over prime fields."""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import BudgetError, ConsistencyError, DimensionError
from .quiver import DimVector, Quiver, euler_form, slope
from .ratfunc import HalfPowerRational, minus_v_power

DEFAULT_BUDGET = 10 ** 7

Matrix = tuple[tuple[int, ...], ...]


def budget_from_env() -> int:
    return int(os.environ.get("QUIVERDT_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class FFRep:
    """A representation over F_p: one d_j x d_i matrix per arrow i -> j, in
    the order of :meth:`Quiver.arrow_list`."""

    p: int
    dims: DimVector
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        for m in self.maps:
            if any(not 0 <= x < self.p for row in m for x in row):
                raise DimensionError("matrix entries must be reduced mod p")

    def check_shapes(self, Q: Quiver):
        arrows = Q.arrow_list()
        if len(arrows) != len(self.maps) or len(self.dims) != Q.n:
            raise DimensionError("representation does not match the quiver")
        for (i, j), m in zip(arrows, self.maps):
            if len(m) != self.dims[j] or any(len(row) != self.dims[i] for row in m):
                raise DimensionError(f"arrow {i}->{j} needs a {self.dims[j]}x{self.dims[i]} matrix")


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)|."""
    result = q ** (n * (n - 1) // 2)
    for nu in range(1, n + 1):
        result *= q ** nu - 1
    return result


def rep_space_dim(Q: Quiver, d: Sequence[int]) -> int:
    return sum(Q.arrows[i][j] * d[i] * d[j] for i in range(Q.n) for j in range(Q.n))


# subspaces of F_p^n

def _rank(rows: list[list[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] * inv
            rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@lru_cache(maxsize=None)
def subspaces(n: int, k: int, p: int) -> tuple[frozenset, ...]:
    """All k-dimensional subspaces of F_p^n, each as the frozenset of its vectors.

    Subspaces are generated from reduced row-echelon bases, one per subspace.
    """
    out = []
    for pivots in itertools.combinations(range(n), k):
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
        for vals in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), x in zip(free, vals):
                rows[r][c] = x
            out.append(_span(rows, n, p))
    return tuple(out)


def _span(rows, n, p) -> frozenset:
    vecs = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        vecs.add(tuple(sum(c * r[i] for c, r in zip(coeffs, rows)) % p for i in range(n)))
    return frozenset(vecs)


def _apply(m: Matrix, v: tuple[int, ...], p: int) -> tuple[int, ...]:
    return tuple(sum(a * x for a, x in zip(row, v)) % p for row in m)


def _invariant(Q: Quiver, M: FFRep, choice: Sequence[frozenset]) -> bool:
    for (i, j), m in zip(Q.arrow_list(), M.maps):
        target = choice[j]
        for v in choice[i]:
            if _apply(m, v, M.p) not in target:
                return False
    return True


def _subrep_tuples(Q: Quiver, M: FFRep, e: DimVector):
    pools = [subspaces(n, k, M.p) for n, k in zip(M.dims, e)]
    for choice in itertools.product(*pools):
        if _invariant(Q, M, choice):
            yield choice


def count_subreps(Q: Quiver, M: FFRep, e: Sequence[int], budget: int | None = None) -> int:
    """Number of subrepresentations of ``M`` with dimension vector ``e``."""
    M.check_shapes(Q)
    e = Q.check(e)
    if any(x > n for x, n in zip(e, M.dims)):
        return 0
    budget = budget_from_env() if budget is None else budget
    work = 1
    for n, k in zip(M.dims, e):
        work *= len(subspaces(n, k, M.p))
    if work > budget:
        raise BudgetError(f"{work} subspace tuples exceed budget {budget}")
    return sum(1 for _ in _subrep_tuples(Q, M, e))


def is_semistable(Q: Quiver, theta: Sequence[int], M: FFRep) -> bool:
    """No non-zero subrepresentation has strictly larger slope."""
    M.check_shapes(Q)
    mu = slope(theta, M.dims)
    for e in itertools.product(*(range(n + 1) for n in M.dims)):
        if any(e) and slope(theta, e) > mu:
            for _ in _subrep_tuples(Q, M, e):
                return False
    return True


def all_reps(Q: Quiver, d: Sequence[int], p: int, budget: int | None = None):
    d = Q.check(d)
    budget = budget_from_env() if budget is None else budget
    size = p ** rep_space_dim(Q, d)
    if size > budget:
        raise BudgetError(f"{size} representation points exceed budget {budget}")
    shapes = [(d[j], d[i]) for i, j in Q.arrow_list()]
    n_entries = sum(r * c for r, c in shapes)
    for flat in itertools.product(range(p), repeat=n_entries):
        maps, pos = [], 0
        for r, c in shapes:
            maps.append(tuple(tuple(flat[pos + a * c: pos + (a + 1) * c]) for a in range(r)))
            pos += r * c
        yield FFRep(p, d, tuple(maps))


def count_semistable(Q: Quiver, theta: Sequence[int], d: Sequence[int], p: int,
                     budget: int | None = None) -> int:
    return sum(1 for M in all_reps(Q, d, p, budget) if is_semistable(Q, theta, M))


def stacky_count_from_series(Q: Quiver, d: Sequence[int], coeff: HalfPowerRational, p: int) -> Fraction:
    """|R^sst_d(F_p)| predicted by a semistable-series coefficient."""
    d = Q.check(d)
    value = minus_v_power(-euler_form(Q, d, d)) * coeff
    if not value.is_even():
        raise ConsistencyError(f"coefficient at {d} is not a function of q")
    group = 1
    for x in d:
        group *= gl_order(x, p)
    return value.evaluate_q(p) * group


def stack_count_check(Q: Quiver, theta: Sequence[int], d: Sequence[int], p: int,
                      coeff: HalfPowerRational, budget: int | None = None) -> bool:
    return stacky_count_from_series(Q, d, coeff, p) == count_semistable(Q, theta, d, p, budget)


def random_invertible(n: int, p: int, rng: random.Random) -> Matrix:
    while True:
        m = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
        if _rank([list(r) for r in m], p) == n:
            return m


def _matmul(a: Matrix, b: Matrix, p: int) -> Matrix:
    if not a or not b:
        cols = len(b[0]) if b else 0
        return tuple(tuple(0 for _ in range(cols)) for _ in a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) % p
                       for j in range(len(b[0]))) for i in range(len(a)))


def _inverse(m: Matrix, p: int) -> Matrix:
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def base_change(Q: Quiver, M: FFRep, g: Sequence[Matrix]) -> FFRep:
    """The representation g . M with M_alpha -> g_j M_alpha g_i^{-1}."""
    inv = [_inverse(x, M.p) if x else x for x in g]
    maps = []
    for (i, j), m in zip(Q.arrow_list(), M.maps):
        if not m or not m[0]:
            maps.append(m)
            continue
        maps.append(_matmul(_matmul(g[j], m, M.p), inv[i], M.p))
    return FFRep(M.p, M.dims, tuple(maps))
