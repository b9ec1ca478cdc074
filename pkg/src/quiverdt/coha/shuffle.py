"""The shuffle product with kernel on symmetric polynomials, and its sign twist."""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..errors import ConsistencyError, SymmetryError
from ..quiver import DimVector, Quiver, add, euler_form
from . import sympoly
from .symmetric import MultiPartition, SymElement


def _layout(n: DimVector) -> list[int]:
    offsets, acc = [], 0
    for x in n:
        offsets.append(acc)
        acc += x
    return offsets


def _embed(poly: dict, d: DimVector, n: DimVector, second: bool) -> dict:
    # place the variables of A_d on the first (or last) slots of each vertex block of A_n
    nvars = sum(n)
    offs = _layout(n)
    target = []
    for i, di in enumerate(d):
        start = offs[i] + (n[i] - di if second else 0)
        target.extend(range(start, start + di))
    out = {}
    for m, c in poly.items():
        new = [0] * nvars
        for k, e in enumerate(m):
            new[target[k]] = e
        out[tuple(new)] = c
    return out


@lru_cache(maxsize=None)
def _kernel(Q: Quiver, d: DimVector, e: DimVector) -> dict:
    """Polynomial part of the kernel, times the block Vandermondes at loop-free vertices.

    Dividing the shuffle sum of f g K by the full Vandermonde at loop-free
    vertices accounts for the exponent -1 factors.
    """
    n = add(d, e)
    nvars = sum(n)
    offs = _layout(n)
    result = {(0,) * nvars: 1}
    for i in range(Q.n):
        for j in range(Q.n):
            exp = Q.arrows[i][j] - (1 if i == j else 0)
            if exp <= 0:
                continue
            for r in range(d[i]):
                for s in range(e[j]):
                    lin = sympoly.linear(nvars, offs[j] + d[j] + s, offs[i] + r)
                    result = sympoly.mul(result, sympoly.power(lin, exp, nvars))
    for i in _loopless(Q):
        base = offs[i]
        for lo, hi in ((0, d[i]), (d[i], n[i])):
            for r in range(lo, hi):
                for s in range(r + 1, hi):
                    result = sympoly.mul(result, sympoly.linear(nvars, base + s, base + r))
    return result


def _loopless(Q: Quiver) -> list[int]:
    return [i for i in range(Q.n) if Q.arrows[i][i] == 0]


@lru_cache(maxsize=None)
def _shuffles(Q: Quiver, d: DimVector, e: DimVector) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (d,e)-shuffles as variable substitutions, with the sign from loop-free vertices."""
    n = add(d, e)
    offs = _layout(n)
    loopless = set(_loopless(Q))
    per_vertex = []
    for i in range(Q.n):
        choices = []
        for first in itertools.combinations(range(n[i]), d[i]):
            rest = [k for k in range(n[i]) if k not in first]
            perm = tuple(offs[i] + k for k in list(first) + rest)
            inversions = sum(first) - d[i] * (d[i] - 1) // 2
            sign = -1 if (i in loopless and inversions % 2) else 1
            choices.append((perm, sign))
        per_vertex.append(choices)
    out = []
    for combo in itertools.product(*per_vertex):
        perm = tuple(itertools.chain.from_iterable(p for p, _ in combo))
        sign = 1
        for _, s in combo:
            sign *= s
        out.append((perm, sign))
    return tuple(out)


def _shuffle_poly(Q: Quiver, d: DimVector, e: DimVector, pf: dict, pg: dict) -> dict:
    n = add(d, e)
    offs = _layout(n)
    base = sympoly.mul(sympoly.mul(_embed(pf, d, n, False), _embed(pg, e, n, True)),
                       _kernel(Q, d, e))
    total: dict = {}
    for perm, sign in _shuffles(Q, d, e):
        sympoly.add_into(total, sympoly.permute(base, perm), sign)
    for i in _loopless(Q):
        for r in range(n[i]):
            for s in range(r + 1, n[i]):
                total = sympoly.div_linear(total, offs[i] + s, offs[i] + r)
    return total


def shuffle_product(Q: Quiver, f: SymElement, g: SymElement) -> SymElement:
    """f * g in A_{d+e}, of degree deg f + deg g - chi(d,e)."""
    d, e = Q.check(f.d), Q.check(g.d)
    n = add(d, e)
    degree = f.degree + g.degree - euler_form(Q, d, e)
    if f.is_zero() or g.is_zero():
        return SymElement(n, degree)
    pf, sf = f.to_poly()
    pg, sg = g.to_poly()
    poly = _shuffle_poly(Q, d, e, pf, pg)
    if degree < 0:
        if poly:
            raise ConsistencyError("non-zero product in negative degree")
        return SymElement(n, degree)
    return SymElement.from_poly(n, degree, poly, sf * sg)


@lru_cache(maxsize=None)
def basis_product(Q: Quiver, d: DimVector, lam: MultiPartition,
                  e: DimVector, rho: MultiPartition) -> SymElement:
    """Cached product of two monomial-symmetric basis elements."""
    return shuffle_product(Q, SymElement.basis_element(d, lam), SymElement.basis_element(e, rho))


def psi(Q: Quiver, d, e) -> int:
    """A bilinear form mod 2 making the twisted product super-commutative.

    With l(d) = sum (1 - a_ii) d_i, the form chi(d,e) + l(d) l(e) is alternating
    mod 2; psi is its strictly upper-triangular half in the vertex order.
    """
    ell = [(1 - Q.arrows[i][i]) % 2 for i in range(Q.n)]
    total = 0
    for i in range(Q.n):
        for j in range(i + 1, Q.n):
            b = (-Q.arrows[i][j] + ell[i] * ell[j]) % 2
            total += b * d[i] * e[j]
    return total % 2


def parity(Q: Quiver, d) -> int:
    """Parity of elements of A_d: that of the cohomological degree n, i.e. chi(d,d) mod 2."""
    return euler_form(Q, d, d) % 2


def _require_symmetric(Q: Quiver):
    if not Q.is_symmetric:
        raise SymmetryError("operation defined for symmetric quivers only")


def star_product(Q: Quiver, f: SymElement, g: SymElement) -> SymElement:
    _require_symmetric(Q)
    prod = shuffle_product(Q, f, g)
    return -prod if psi(Q, f.d, g.d) else prod


def twisted_commutativity_check(Q: Quiver, f: SymElement, g: SymElement) -> bool:
    """f * g == (-1)^chi(d,e) g * f."""
    _require_symmetric(Q)
    lhs = shuffle_product(Q, f, g)
    rhs = shuffle_product(Q, g, f)
    if euler_form(Q, f.d, g.d) % 2:
        rhs = -rhs
    return lhs == rhs


def supercommutativity_check(Q: Quiver, f: SymElement, g: SymElement) -> bool:
    """f * g == (-1)^(|f||g|) g * f for the twisted product."""
    lhs = star_product(Q, f, g)
    rhs = star_product(Q, g, f)
    if parity(Q, f.d) * parity(Q, g.d):
        rhs = -rhs
    return lhs == rhs
