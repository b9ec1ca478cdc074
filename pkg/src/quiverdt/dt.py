"""Wall-crossing recursion and extraction of quantized DT invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ConsistencyError, GenericityError, SymmetryError, ZeroVectorError
from .quiver import (DimVector, Genericity, Quiver, antisym_form, box_vectors, euler_form,
                     hn_types, is_mu_generic, leq, slope)
from .ratfunc import ONE, ZERO, HalfPowerRational, Q, minus_v_power
from .series import TwistedSeries, ordered_product, plethystic_log


@dataclass(frozen=True)
class DTResult:
    """Omega-tilde_d(q) as integer coefficients (lowest power of q first),
    together with the non-zero pairs (k, Omega_{d,k})."""

    d: DimVector
    omega_tilde: tuple[int, ...]
    omegas: tuple[tuple[int, int], ...]
    chi: int
    genericity: Genericity | None = field(default=None, compare=False)

    @classmethod
    def from_polynomial(cls, d, coeffs, chi, genericity=None) -> "DTResult":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        for c in coeffs:
            if Fraction(c).denominator != 1:
                raise ConsistencyError(f"non-integral DT coefficient {c} at d={d}")
        ints = tuple(int(c) for c in coeffs)
        omegas = tuple((chi + 2 * j, c) for j, c in enumerate(ints) if c)
        return cls(tuple(d), ints, omegas, chi, genericity)

    def omega(self, k: int) -> int:
        return dict(self.omegas).get(k, 0)


def series_a(Q_: Quiver, box) -> TwistedSeries:
    """The stacky count of all representations, sum_d (-v)^(-chi(d,d)) prod (1-q^-nu)^-1 t^d."""
    box = Q_.check(box)
    coeffs = {}
    for d in box_vectors(box):
        coeffs[d] = _a_coefficient(Q_, d)
    return TwistedSeries(Q_, box, coeffs)


@lru_cache(maxsize=None)
def _inv_qfactorial(n: int) -> HalfPowerRational:
    # prod_{nu=1}^n (1 - q^-nu)^-1
    acc = ONE
    for nu in range(1, n + 1):
        acc = acc * (ONE - HalfPowerRational.q_power(-nu)).inverse()
    return acc


def _a_coefficient(Q_: Quiver, d: DimVector) -> HalfPowerRational:
    c = minus_v_power(-euler_form(Q_, d, d))
    for x in d:
        c = c * _inv_qfactorial(x)
    return c


@lru_cache(maxsize=None)
def _semistable_coefficients(Q_: Quiver, theta: tuple[int, ...], box: DimVector):
    """A^sst_d for every 0 != d <= box, solved by induction on the total dimension."""
    sst: dict[DimVector, HalfPowerRational] = {}
    for d in box_vectors(box, nonzero=True):
        rest = ZERO
        for hn in hn_types(Q_, theta, d):
            if len(hn) == 1:
                continue
            twist = sum(antisym_form(Q_, hn[r], hn[s])
                        for r in range(len(hn)) for s in range(r + 1, len(hn)))
            term = minus_v_power(twist)
            for part in hn:
                term = term * sst[part]
            rest = rest + term
        sst[d] = _a_coefficient(Q_, d) - rest
    return sst


def semistable_series(Q_: Quiver, theta: Sequence[int], mu, box) -> TwistedSeries:
    box = Q_.check(box)
    theta = tuple(int(t) for t in theta)
    mu = Fraction(mu)
    sst = _semistable_coefficients(Q_, theta, box)
    coeffs = {d: c for d, c in sst.items() if slope(theta, d) == mu}
    coeffs[Q_.zero()] = ONE
    return TwistedSeries(Q_, box, coeffs)


def dt_tilde(Q_: Quiver, theta: Sequence[int], mu, box) -> list[DTResult]:
    """Omega-tilde for every non-zero d <= box of slope ``mu``."""
    box = Q_.check(box)
    theta = tuple(int(t) for t in theta)
    mu = Fraction(mu)
    gen = is_mu_generic(Q_, theta, mu, box)
    if not gen:
        raise GenericityError(f"stability {theta} is not generic for slope {mu}: "
                              f"<{gen.witness[0]},{gen.witness[1]}> != 0")
    b = semistable_series(Q_, theta, mu, box).map_coefficients(lambda c: c.substitute_v(-1))
    log_b = plethystic_log(b)
    one_minus_q = ONE - Q
    results = []
    for d in box_vectors(box, nonzero=True):
        if slope(theta, d) != mu:
            continue
        chi = euler_form(Q_, d, d)
        value = one_minus_q * minus_v_power(-chi) * log_b[d]
        poly = value.q_polynomial()
        if poly is None:
            raise ConsistencyError(f"Omega-tilde at d={d} is not a polynomial in q: {value}")
        results.append(DTResult.from_polynomial(d, poly, chi, gen))
    return results


def dt_invariants(Q_: Quiver, theta: Sequence[int], d: Sequence[int], box=None) -> DTResult:
    d = Q_.check(d)
    if not any(d):
        raise ZeroVectorError("DT invariants need a non-zero dimension vector")
    box = d if box is None else Q_.check(box)
    if not leq(d, box):
        raise ValueError(f"d={d} lies outside box {box}")
    mu = slope(theta, d)
    for r in dt_tilde(Q_, theta, mu, box):
        if r.d == d:
            return r
    raise AssertionError("unreachable")


def realized_slopes(theta, box) -> list[Fraction]:
    return sorted({slope(theta, d) for d in box_vectors(box, nonzero=True)}, reverse=True)


def wallcross_check(Q_: Quiver, theta: Sequence[int], box) -> bool:
    """Does the decreasing-slope product of the semistable series reproduce A?"""
    box = Q_.check(box)
    theta = tuple(int(t) for t in theta)
    factors = [(mu, semistable_series(Q_, theta, mu, box)) for mu in realized_slopes(theta, box)]
    product = ordered_product(factors, Q_, box)
    return product == series_a(Q_, box)


def theta_independence_check(Q_: Quiver, theta1, theta2, d, box=None) -> bool:
    if not Q_.is_symmetric:
        raise SymmetryError("stability independence only holds for symmetric quivers")
    return (dt_invariants(Q_, theta1, d, box).omega_tilde
            == dt_invariants(Q_, theta2, d, box).omega_tilde)
