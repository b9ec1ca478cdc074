"""Sparse multivariate polynomials as ``{exponent tuple: coefficient}`` dicts."""

from __future__ import annotations

from collections import defaultdict

from ..errors import ConsistencyError

Poly = dict[tuple[int, ...], int]


def add_into(acc: Poly, p: Poly, scale=1) -> None:
    for m, c in p.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


def mul(p: Poly, q: Poly) -> Poly:
    out: dict = defaultdict(int)
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
    return {m: c for m, c in out.items() if c}


def linear(nvars: int, plus: int, minus: int) -> Poly:
    """x_plus - x_minus."""
    a = [0] * nvars
    b = [0] * nvars
    a[plus] = 1
    b[minus] = 1
    return {tuple(a): 1, tuple(b): -1}


def power(p: Poly, k: int, nvars: int) -> Poly:
    result: Poly = {(0,) * nvars: 1}
    for _ in range(k):
        result = mul(result, p)
    return result


def permute(p: Poly, target: tuple[int, ...]) -> Poly:
    """Substitute x_k -> x_target[k]."""
    out = {}
    n = len(target)
    for m, c in p.items():
        new = [0] * n
        for k, e in enumerate(m):
            if e:
                new[target[k]] = e
        out[tuple(new)] = c
    return out


def div_linear(p: Poly, a: int, b: int) -> Poly:
    """Exact quotient of ``p`` by (x_a - x_b); raises if there is a remainder."""
    if not p:
        return {}
    groups: dict[int, dict] = defaultdict(dict)
    for m, c in p.items():
        key = m[:a] + (0,) + m[a + 1:]
        groups[m[a]][key] = c
    top = max(groups)
    quotient: Poly = {}
    carry: dict = {}
    # (x_a - x_b) * sum_k q_k x_a^k = p  gives  q_{k-1} = p_k + x_b q_k
    for k in range(top, 0, -1):
        cur = dict(groups.get(k, {}))
        for key, c in carry.items():
            shifted = key[:b] + (key[b] + 1,) + key[b + 1:]
            v = cur.get(shifted, 0) + c
            if v:
                cur[shifted] = v
            else:
                cur.pop(shifted, None)
        for key, c in cur.items():
            quotient[key[:a] + (k - 1,) + key[a + 1:]] = c
        carry = cur
    remainder = dict(groups.get(0, {}))
    for key, c in carry.items():
        shifted = key[:b] + (key[b] + 1,) + key[b + 1:]
        v = remainder.get(shifted, 0) + c
        if v:
            remainder[shifted] = v
        else:
            remainder.pop(shifted, None)
    if remainder:
        raise ConsistencyError(f"polynomial not divisible by x{a} - x{b}")
    return quotient
