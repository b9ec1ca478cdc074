"""Box-truncated power series in the vertex variables t_i over Q(v).

One value type serves both the ordinary ring and the twisted ring in which
t^d o t^e = (-v)^<d,e> t^(d+e); the product is chosen per operation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import BoxMismatchError, OrderError, ZeroVectorError
from .quiver import DimVector, Quiver, add, antisym_form, leq
from .ratfunc import ONE, ZERO, HalfPowerRational, Q, minus_v_power


class TwistedSeries:
    """Coefficients t^d -> HalfPowerRational for d inside ``box``; missing keys are 0."""

    __slots__ = ("quiver", "box", "coeffs")

    def __init__(self, quiver: Quiver, box: Sequence[int], coeffs: Mapping | None = None):
        self.quiver = quiver
        self.box = quiver.check(box)
        clean: dict[DimVector, HalfPowerRational] = {}
        for d, c in (coeffs or {}).items():
            d = quiver.check(d)
            if not isinstance(c, HalfPowerRational):
                c = HalfPowerRational.const(c)
            if c and leq(d, self.box):
                clean[d] = c
        self.coeffs = clean

    @classmethod
    def one(cls, quiver: Quiver, box) -> "TwistedSeries":
        return cls(quiver, box, {quiver.zero(): ONE})

    @classmethod
    def monomial(cls, quiver: Quiver, box, d, c=ONE) -> "TwistedSeries":
        return cls(quiver, box, {tuple(d): c})

    def __getitem__(self, d) -> HalfPowerRational:
        return self.coeffs.get(tuple(d), ZERO)

    def constant_term(self) -> HalfPowerRational:
        return self[self.quiver.zero()]

    def _check_compatible(self, other: "TwistedSeries"):
        if not isinstance(other, TwistedSeries):
            raise TypeError("expected a TwistedSeries")
        if other.quiver != self.quiver:
            raise BoxMismatchError("series over different quivers")
        if other.box != self.box:
            raise BoxMismatchError(f"box {self.box} != {other.box}")

    def _like(self, coeffs) -> "TwistedSeries":
        return TwistedSeries(self.quiver, self.box, coeffs)

    def __add__(self, other: "TwistedSeries") -> "TwistedSeries":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, ZERO) + c
        return self._like(out)

    def __neg__(self):
        return self._like({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TwistedSeries":
        return self._like({d: c * x for d, x in self.coeffs.items()})

    def map_coefficients(self, fn) -> "TwistedSeries":
        return self._like({d: fn(c) for d, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, TwistedSeries):
            return NotImplemented
        return (self.quiver == other.quiver and self.box == other.box
                and self.coeffs == other.coeffs)

    def __repr__(self):
        body = ", ".join(f"{d}: {c}" for d, c in sorted(self.coeffs.items()))
        return f"TwistedSeries(box={self.box}, {{{body}}})"

    def restrict(self, keep) -> "TwistedSeries":
        """Keep only coefficients whose exponent satisfies ``keep``."""
        return self._like({d: c for d, c in self.coeffs.items() if keep(d)})

    def is_zero(self) -> bool:
        return not self.coeffs


def _product(f: TwistedSeries, g: TwistedSeries, twist: bool) -> TwistedSeries:
    f._check_compatible(g)
    Q_ = f.quiver
    out: dict[DimVector, HalfPowerRational] = {}
    for d, a in f.coeffs.items():
        for e, b in g.coeffs.items():
            c = add(d, e)
            if not leq(c, f.box):
                continue
            term = a * b
            if twist:
                k = antisym_form(Q_, d, e)
                if k:
                    term = term * minus_v_power(k)
            out[c] = out.get(c, ZERO) + term
    return f._like(out)


def ordinary_mul(f: TwistedSeries, g: TwistedSeries) -> TwistedSeries:
    return _product(f, g, twist=False)


def twisted_mul(f: TwistedSeries, g: TwistedSeries) -> TwistedSeries:
    return _product(f, g, twist=True)


def ordered_product(factors: Iterable[tuple[Fraction, TwistedSeries]], quiver: Quiver | None = None,
                    box=None) -> TwistedSeries:
    """Left-to-right twisted product of series tagged by strictly decreasing slopes."""
    factors = list(factors)
    if not factors:
        if quiver is None or box is None:
            raise ValueError("empty product needs a quiver and a box")
        return TwistedSeries.one(quiver, box)
    for (mu1, _), (mu2, _) in zip(factors, factors[1:]):
        if not Fraction(mu1) > Fraction(mu2):
            raise OrderError(f"slope tags must strictly decrease: {mu1} then {mu2}")
    result = factors[0][1]
    for _, f in factors[1:]:
        result = twisted_mul(result, f)
    return result


def adams(f: TwistedSeries, n: int) -> TwistedSeries:
    """psi_n: t^d -> t^(n d) with v -> v^n on coefficients."""
    if n < 1:
        raise ValueError("Adams operations need n >= 1")
    if n == 1:
        return f
    out = {}
    for d, c in f.coeffs.items():
        nd = tuple(n * x for x in d)
        if leq(nd, f.box):
            out[nd] = c.substitute_v(n)
    return f._like(out)


def _degree_bound(box: DimVector) -> int:
    return sum(box)


def _exp_series(h: TwistedSeries) -> TwistedSeries:
    # h has zero constant term, so h^k vanishes once k exceeds the box size
    result = TwistedSeries.one(h.quiver, h.box)
    power = TwistedSeries.one(h.quiver, h.box)
    for k in range(1, _degree_bound(h.box) + 1):
        power = ordinary_mul(power, h).scale(Fraction(1, k))
        if power.is_zero():
            break
        result = result + power
    return result


def _log_series(g: TwistedSeries) -> TwistedSeries:
    h = g - TwistedSeries.one(g.quiver, g.box)
    result = TwistedSeries(g.quiver, g.box)
    power = TwistedSeries.one(g.quiver, g.box)
    for k in range(1, _degree_bound(g.box) + 1):
        power = ordinary_mul(power, h)
        if power.is_zero():
            break
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
    return result


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def plethystic_exp(f: TwistedSeries) -> TwistedSeries:
    """Exp(f) = exp(sum_n psi_n(f)/n), truncated to the box."""
    if f.constant_term():
        raise ZeroVectorError("plethystic Exp needs a series without constant term")
    total = TwistedSeries(f.quiver, f.box)
    for n in range(1, _degree_bound(f.box) + 1):
        total = total + adams(f, n).scale(Fraction(1, n))
    return _exp_series(total)


def plethystic_log(g: TwistedSeries) -> TwistedSeries:
    """Inverse of :func:`plethystic_exp` via Moebius inversion of the ordinary log."""
    if g.constant_term() != ONE:
        raise ValueError("plethystic Log needs constant term 1")
    logg = _log_series(g)
    total = TwistedSeries(g.quiver, g.box)
    for n in range(1, _degree_bound(g.box) + 1):
        mu = mobius(n)
        if mu:
            total = total + adams(logg, n).scale(Fraction(mu, n))
    return total


def free_supercomm_series(quiver: Quiver, generators: Iterable[tuple[Sequence[int], int, int]],
                          box) -> TwistedSeries:
    """Hilbert series of the free super-commutative algebra on V[z].

    Each generator (d, k, m) stands for m copies of a basis vector in bidegree
    (d, k); the z-tower contributes the factor 1/(1-q).
    """
    box = quiver.check(box)
    inner = TwistedSeries(quiver, box)
    one_minus_q_inv = (ONE - Q).inverse()
    for d, k, m in generators:
        d = quiver.check(d)
        if not any(d):
            raise ZeroVectorError("generators need a non-zero dimension vector")
        c = HalfPowerRational.v_power(k, (-1) ** (k % 2) * m) * one_minus_q_inv
        inner = inner + TwistedSeries.monomial(quiver, box, d, c)
    return plethystic_exp(inner)

