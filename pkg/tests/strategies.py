"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from quiverdt.quiver import Quiver
from quiverdt.ratfunc import HalfPowerRational


@st.composite
def quivers(draw, max_vertices=3, max_arrows=3, symmetric=False):
    n = draw(st.integers(1, max_vertices))
    a = [[draw(st.integers(0, max_arrows)) for _ in range(n)] for _ in range(n)]
    if symmetric:
        for i in range(n):
            for j in range(i):
                a[i][j] = a[j][i]
    return Quiver(tuple(map(tuple, a)))


def vectors(n, hi=3):
    return st.tuples(*[st.integers(0, hi)] * n)


@st.composite
def laurent(draw, lo=-4, hi=4, terms=3):
    coeffs = draw(st.dictionaries(st.integers(lo, hi), st.integers(-5, 5), max_size=terms))
    return HalfPowerRational.from_laurent(coeffs)


@st.composite
def ratfuncs(draw):
    num = draw(laurent())
    den = draw(laurent())
    if den.is_zero():
        return num
    return num / den
