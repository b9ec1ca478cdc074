from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import gaussian_binomial
from quiverdt.dt import (DTResult, dt_invariants, dt_tilde, realized_slopes, semistable_series,
                         series_a, theta_independence_check, wallcross_check)
from quiverdt.errors import ConsistencyError, GenericityError, SymmetryError, ZeroVectorError
from quiverdt.quiver import (Quiver, bipartite_symmetric_quiver, kronecker_quiver, loop_quiver,
                             two_cycle_quiver)
from quiverdt.ratfunc import ONE, HalfPowerRational, V

K2 = kronecker_quiver()


def test_series_a_coefficients():
    s = series_a(loop_quiver(0), (2,))
    qinv = HalfPowerRational.q_power(-1)
    # chi = d^2 for no loops; (-v)^(-1) / (1 - q^-1) at d = 1
    assert s[(1,)] == -V.inverse() / (ONE - qinv)
    assert s[(0,)] == ONE


def test_dt_result_from_polynomial():
    r = DTResult.from_polynomial((2,), [1, 0, 2, 0, 0], -4)
    assert r.omega_tilde == (1, 0, 2)
    assert r.omegas == ((-4, 1), (0, 2))
    assert r.omega(-2) == 0
    with pytest.raises(ConsistencyError):
        DTResult.from_polynomial((1,), [Fraction(1, 2)], 0)


def test_loop_quivers_small():
    # no loops and one loop: a single invariant at d = 1
    assert dt_invariants(loop_quiver(0), (0,), (1,)).omegas == ((1, 1),)
    assert dt_invariants(loop_quiver(0), (0,), (2,), (3,)).omegas == ()
    assert dt_invariants(loop_quiver(1), (0,), (1,)).omegas == ((0, 1),)
    assert dt_invariants(loop_quiver(1), (0,), (2,)).omegas == ()
    assert dt_invariants(loop_quiver(2), (0,), (2,)).omegas == ((-4, 1),)
    assert dt_invariants(loop_quiver(3), (0,), (1,)).omegas == ((-2, 1),)


def test_loop_quiver_three_loops_dimension_three():
    r = dt_invariants(loop_quiver(3), (0,), (3,))
    assert [p for p in r.omegas if p[0] <= -12] == [(-18, 1), (-14, 1), (-12, 1)]


@pytest.mark.parametrize("m", [2, 3, 4])
def test_generalized_kronecker_projective_space(m):
    # d = (1,1) moduli is P^(m-1)
    r = dt_invariants(kronecker_quiver(m), (1, 0), (1, 1))
    assert r.omega_tilde == (1,) * m


def test_kronecker_higher_diagonal_vanishes():
    for d in ((2, 2), (3, 3)):
        assert dt_invariants(K2, (1, 0), d).omegas == ()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bipartite_grassmannians(n):
    Q = bipartite_symmetric_quiver(n)
    for r in range(1, n + 1):
        assert dt_invariants(Q, (r, -1), (1, r)).omega_tilde == tuple(gaussian_binomial(n, r))


def test_genericity_is_enforced():
    with pytest.raises(GenericityError):
        dt_tilde(K2, (0, 0), 0, (1, 1))
    with pytest.raises(ZeroVectorError):
        dt_invariants(K2, (1, 0), (0, 0))
    with pytest.raises(ValueError):
        dt_invariants(K2, (1, 0), (2, 2), (1, 1))


def test_realized_slopes():
    assert realized_slopes((1, 0), (1, 1)) == [1, Fraction(1, 2), 0]


def test_semistable_series_constant_term_and_support():
    s = semistable_series(K2, (1, 0), Fraction(1, 2), (2, 2))
    assert s[(0, 0)] == ONE
    assert set(s.coeffs) <= {(0, 0), (1, 1), (2, 2)}


def test_wallcross_examples():
    assert wallcross_check(K2, (1, 0), (2, 3))
    assert wallcross_check(kronecker_quiver(3), (0, 1), (2, 2))
    assert wallcross_check(Quiver(((0, 1, 0), (0, 0, 1), (1, 0, 0))), (1, 0, 0), (1, 1, 1))


def test_theta_independence():
    assert theta_independence_check(two_cycle_quiver(), (0, 0), (3, -1), (2, 1))
    with pytest.raises(SymmetryError):
        theta_independence_check(K2, (1, 0), (0, 1), (1, 1))


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 3), st.integers(1, 3))
def test_box_independence(m, d):
    Q = loop_quiver(m)
    assert dt_invariants(Q, (0,), (d,)) == dt_invariants(Q, (0,), (d,), (d + 1,))


@settings(max_examples=15, deadline=None)
@given(st.tuples(st.integers(1, 2), st.integers(1, 2)), st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_symmetric_positivity_and_support(d, theta):
    r = dt_invariants(bipartite_symmetric_quiver(2), theta, d)
    assert all(v > 0 and r.chi <= k <= 2 - r.chi for k, v in r.omegas)
    assert r == dt_invariants(bipartite_symmetric_quiver(2), theta, d, (2, 2))
