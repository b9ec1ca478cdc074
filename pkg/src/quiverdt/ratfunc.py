"""Exact rational functions in one variable ``v`` standing for q^(1/2).

Polynomials are tuples of :class:`Fraction` coefficients, lowest degree first,
with no trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Poly = tuple[Fraction, ...]

ZERO_POLY: Poly = ()
ONE_POLY: Poly = (Fraction(1),)


def _trim(c: Sequence) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(Fraction(x) for x in c)


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return _trim([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO_POLY
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def pscale(a: Poly, c) -> Poly:
    return _trim([x * c for x in a]) if c else ZERO_POLY


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        if c:
            quot[k] = c
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return _trim(quot), _trim(rem)


def pmonic(a: Poly) -> Poly:
    return tuple(x / a[-1] for x in a) if a else a


def pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def pcompose_power(a: Poly, n: int) -> Poly:
    """a(v^n) for n >= 1."""
    if n == 1 or not a:
        return a
    out = [Fraction(0)] * ((len(a) - 1) * n + 1)
    for i, x in enumerate(a):
        out[i * n] = x
    return tuple(out)


def peval(a: Poly, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def monomial(k: int, c=1) -> Poly:
    return _trim([0] * k + [c])


class HalfPowerRational:
    """An element of Q(v), v = q^(1/2), kept in lowest terms.

    The denominator has integer coefficients with content 1 and a positive
    leading coefficient, so equal values have identical representations.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Iterable = ZERO_POLY, den: Iterable = ONE_POLY, *, _reduced=False):
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c) -> "HalfPowerRational":
        return cls((Fraction(c),))

    @classmethod
    def v_power(cls, k: int, c=1) -> "HalfPowerRational":
        """c * v^k for any integer k."""
        if k >= 0:
            return cls(monomial(k, c))
        return cls((Fraction(c),), monomial(-k))

    @classmethod
    def q_power(cls, k: int, c=1) -> "HalfPowerRational":
        return cls.v_power(2 * k, c)

    @classmethod
    def from_laurent(cls, coeffs: dict[int, object]) -> "HalfPowerRational":
        """Build from a mapping v-exponent -> coefficient."""
        if not coeffs:
            return ZERO
        low = min(coeffs)
        shift = -low if low < 0 else 0
        num = [0] * (max(coeffs) + shift + 1)
        for k, c in coeffs.items():
            num[k + shift] = c
        return cls(num, monomial(shift))

    # predicates
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        """True when the denominator is a monomial in v."""
        return all(c == 0 for c in self.den[:-1])

    def is_even(self) -> bool:
        """True when the value is a function of q = v^2 alone."""
        return (all(c == 0 for c in self.num[1::2]) and all(c == 0 for c in self.den[1::2]))

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, HalfPowerRational):
            return other
        if isinstance(other, (int, Fraction)):
            return HalfPowerRational.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return HalfPowerRational(padd(self.num, other.num), self.den)
        return HalfPowerRational(padd(pmul(self.num, other.den), pmul(other.num, self.den)),
                                 pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return HalfPowerRational(pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == ONE_POLY and other.den == ONE_POLY:
            return HalfPowerRational(pmul(self.num, other.num), ONE_POLY, _reduced=True)
        # cross-cancel keeps intermediate degrees small
        g1 = pgcd(self.num, other.den)
        g2 = pgcd(other.num, self.den)
        n1, d2 = pdivmod(self.num, g1)[0], pdivmod(other.den, g1)[0]
        n2, d1 = pdivmod(other.num, g2)[0], pdivmod(self.den, g2)[0]
        return HalfPowerRational(*_scale_den(pmul(n1, n2), pmul(d1, d2)), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "HalfPowerRational":
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(v)")
        return HalfPowerRational(*_scale_den(self.den, self.num), _reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HalfPowerRational.const(other)
        if not isinstance(other, HalfPowerRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def substitute_v(self, n: int) -> "HalfPowerRational":
        """The field endomorphism v -> v^n (n = -1 realizes q -> 1/q)."""
        if n == 0:
            raise ValueError("substitute_v needs a non-zero exponent")
        if n > 0:
            return HalfPowerRational(pcompose_power(self.num, n), pcompose_power(self.den, n))
        if not self.num:
            return self
        k = -n
        shift = k * (len(self.den) - len(self.num))
        num = pcompose_power(tuple(reversed(self.num)), k)
        den = pcompose_power(tuple(reversed(self.den)), k)
        if shift >= 0:
            num = pmul(num, monomial(shift))
        else:
            den = pmul(den, monomial(-shift))
        return HalfPowerRational(num, den)

    # evaluation and expansion
    def evaluate_v(self, x):
        d = peval(self.den, Fraction(x))
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return peval(self.num, Fraction(x)) / d

    def evaluate_q(self, x):
        """Value at q = x; only defined for functions of q alone."""
        if not self.is_even():
            raise ValueError("value depends on q^(1/2); cannot evaluate at q")
        num, den = self.num[::2], self.den[::2]
        d = peval(den, Fraction(x))
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return peval(num, Fraction(x)) / d

    def v_series(self, upto: int) -> dict[int, Fraction]:
        """Laurent expansion around v = 0, all exponents <= ``upto``."""
        val = next(i for i, c in enumerate(self.den) if c)
        den = self.den[val:]
        out: dict[int, Fraction] = {}
        if not self.num:
            return out
        n_terms = upto + val + 1
        inv0 = 1 / den[0]
        coeffs: list[Fraction] = []
        for k in range(max(n_terms, 0)):
            acc = self.num[k] if k < len(self.num) else Fraction(0)
            for j in range(1, min(k, len(den) - 1) + 1):
                acc -= den[j] * coeffs[k - j]
            coeffs.append(acc * inv0)
        for k, c in enumerate(coeffs):
            if c:
                out[k - val] = c
        return out

    def q_series(self, upto: int) -> dict[int, Fraction]:
        """Expansion in q for functions of q alone, exponents <= ``upto``."""
        if not self.is_even():
            raise ValueError("value depends on q^(1/2)")
        return {k // 2: c for k, c in self.v_series(2 * upto).items()}

    def laurent_coefficients(self) -> dict[int, Fraction]:
        """v-exponent -> coefficient for Laurent polynomials."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial in v")
        shift = len(self.den) - 1
        lead = self.den[-1]
        return {i - shift: c / lead for i, c in enumerate(self.num) if c}

    def q_polynomial(self) -> tuple[Fraction, ...] | None:
        """Coefficients in q (low first) if the value lies in Q[q], else None."""
        if self.den != ONE_POLY or not self.is_even():
            return None
        return self.num[::2]

    def __repr__(self):
        return f"HalfPowerRational({format_ratfunc(self)!r})"

    def __str__(self):
        return format_ratfunc(self)


def _scale_den(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Rescale so the denominator is a primitive integer polynomial with positive lead."""
    m = reduce(lcm, (c.denominator for c in den), 1)
    ints = [int(c * m) for c in den]
    g = reduce(gcd, ints, 0)
    if ints[-1] < 0:
        g = -g
    factor = Fraction(m, g)
    return pscale(num, factor), tuple(Fraction(c, g) for c in ints)


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not num:
        return ZERO_POLY, ONE_POLY
    if len(den) > 1:
        g = pgcd(num, den)
        if len(g) > 1:
            num, den = pdivmod(num, g)[0], pdivmod(den, g)[0]
    return _scale_den(num, den)


ZERO = HalfPowerRational()
ONE = HalfPowerRational(ONE_POLY)
V = HalfPowerRational.v_power(1)
Q = HalfPowerRational.v_power(2)


def minus_v_power(k: int) -> HalfPowerRational:
    """(-v)^k, the sign convention for (-q^(1/2))^k."""
    return HalfPowerRational.v_power(k, -1 if k % 2 else 1)


def _format_poly(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p):
        if not c:
            continue
        half, odd = divmod(k, 2)
        parts = []
        if odd:
            parts.append("v")
        if half == 1:
            parts.append("q")
        elif half > 1:
            parts.append(f"q^{half}")
        var = "*".join(parts)
        mag = abs(c)
        if not var:
            body = str(mag)
        elif mag == 1:
            body = var
        else:
            body = f"{mag}*{var}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += sign + body
    return s


def format_ratfunc(f: HalfPowerRational) -> str:
    """Exact string form, e.g. ``(1+q)/(1-q)``; q means v^2."""
    num, den = f.num, f.den
    low = next(c for c in den if c)
    if low < 0:
        num, den = pneg(num), pneg(den)
    if den == ONE_POLY:
        return _format_poly(num)
    n = _format_poly(num)
    d = _format_poly(den)
    if sum(1 for c in num if c) > 1:
        n = f"({n})"
    if sum(1 for c in den if c) > 1 or den[-1] != 1:
        d = f"({d})"
    return f"{n}/{d}"
