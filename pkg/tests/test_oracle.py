import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import gaussian_binomial
from quiverdt.dt import semistable_series
from quiverdt.errors import BudgetError, DimensionError
from quiverdt.oracle import (FFRep, all_reps, base_change, count_semistable, count_subreps,
                             gl_order, is_semistable, random_invertible, rep_space_dim,
                             stack_count_check, stacky_count_from_series, subspaces)
from quiverdt.quiver import kronecker_quiver, loop_quiver, two_cycle_quiver
from quiverdt.ratfunc import ONE, HalfPowerRational, minus_v_power

K2 = kronecker_quiver()


def test_gl_order():
    assert gl_order(0, 5) == 1
    assert gl_order(1, 2) == 1
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48


@pytest.mark.parametrize("n,k,p", [(2, 1, 2), (3, 1, 2), (3, 2, 3), (4, 2, 2), (2, 0, 3)])
def test_subspace_counts_are_gaussian_binomials(n, k, p):
    subs = subspaces(n, k, p)
    assert len(set(subs)) == len(subs)
    assert len(subs) == sum(c * p ** i for i, c in enumerate(gaussian_binomial(n, k)))
    assert all(len(s) == p ** k for s in subs)


def test_count_subreps_examples():
    L0, L1 = loop_quiver(0), loop_quiver(1)
    zero2 = FFRep(2, (2,), ())
    assert count_subreps(L0, zero2, (1,)) == 3
    assert count_subreps(L0, zero2, (0,)) == 1
    assert count_subreps(L0, zero2, (2,)) == 1
    jordan = FFRep(2, (2,), (((0, 1), (0, 0)),))
    assert count_subreps(L1, jordan, (1,)) == 1
    assert count_subreps(L1, jordan, (3,)) == 0


def test_rep_validation():
    with pytest.raises(DimensionError):
        FFRep(2, (1,), (((2,),),))
    with pytest.raises(DimensionError):
        count_subreps(loop_quiver(1), FFRep(2, (2,), (((0, 1),),)), (1,))


def test_semistability_on_kronecker():
    # (1,1) is semistable for theta = (1,0) iff the two scalars are not both zero
    zero = FFRep(3, (1, 1), (((0,),), ((0,),)))
    nonzero = FFRep(3, (1, 1), (((0,),), ((2,),)))
    assert not is_semistable(K2, (1, 0), zero)
    assert is_semistable(K2, (1, 0), nonzero)
    assert count_semistable(K2, (1, 0), (1, 1), 2) == 2 ** 2 - 1
    assert count_semistable(K2, (1, 0), (1, 1), 3) == 3 ** 2 - 1


@pytest.mark.parametrize("Q,d", [(loop_quiver(1), (2,)), (K2, (1, 2)), (two_cycle_quiver(), (1, 1))])
def test_trivial_stability_counts_everything(Q, d):
    theta = (0,) * Q.n
    for p in (2, 3):
        assert count_semistable(Q, theta, d, p) == p ** rep_space_dim(Q, d)


def test_count_bounds():
    for theta in ((1, 0), (0, 1)):
        c = count_semistable(K2, theta, (1, 2), 2)
        assert 0 <= c <= 2 ** rep_space_dim(K2, (1, 2))
    # theta = (0,1) makes (1,2) unstable: the image of the vertex-i space is always a sub
    assert count_semistable(K2, (0, 1), (1, 2), 2) == 0


def test_pipeline_convention_on_empty_quiver():
    # |R_1(F_3)| / |G_1(F_3)| = 1/2, and the pipeline recovers the single point
    L0 = loop_quiver(0)
    coeff = semistable_series(L0, (0,), 0, (1,))[(1,)]
    assert coeff == minus_v_power(-1) / (ONE - HalfPowerRational.q_power(-1))
    assert stacky_count_from_series(L0, (1,), coeff, 3) == 1
    assert stacky_count_from_series(L0, (1,), coeff, 3) / gl_order(1, 3) == Fraction(1, 2)


def test_stack_count_examples():
    L1 = loop_quiver(1)
    coeff = semistable_series(L1, (0,), 0, (1,))[(1,)]
    assert stacky_count_from_series(L1, (1,), coeff, 2) == 2
    kc = semistable_series(K2, (1, 0), Fraction(1, 2), (1, 1))[(1, 1)]
    assert stacky_count_from_series(K2, (1, 1), kc, 2) == 3
    assert stack_count_check(K2, (1, 0), (2, 2), 2,
                             semistable_series(K2, (1, 0), Fraction(1, 2), (2, 2))[(2, 2)])


def test_budget(monkeypatch):
    with pytest.raises(BudgetError):
        list(all_reps(K2, (2, 2), 3, budget=100))
    monkeypatch.setenv("QUIVERDT_BUDGET", "10")
    with pytest.raises(BudgetError):
        count_semistable(loop_quiver(1), (0,), (2,), 2)
    with pytest.raises(BudgetError):
        count_subreps(loop_quiver(0), FFRep(3, (4,), ()), (2,), budget=5)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([(1, 0), (0, 1), (2, -1)]))
def test_semistability_is_invariant_under_base_change(seed, theta):
    rng = random.Random(seed)
    Q, d, p = two_cycle_quiver(), (2, 1), 3
    maps = []
    for i, j in Q.arrow_list():
        maps.append(tuple(tuple(rng.randrange(p) for _ in range(d[i])) for _ in range(d[j])))
    M = FFRep(p, d, tuple(maps))
    g = [random_invertible(n, p, rng) for n in d]
    assert is_semistable(Q, theta, M) == is_semistable(Q, theta, base_change(Q, M, g))
    assert count_subreps(Q, M, (1, 0)) == count_subreps(Q, base_change(Q, M, g), (1, 0))


def test_random_invertible_is_invertible():
    rng = random.Random(1)
    for n in (1, 2, 3):
        m = random_invertible(n, 5, rng)
        ident = FFRep(5, (n,), (tuple(tuple(int(i == j) for j in range(n)) for i in range(n)),))
        conj = base_change(loop_quiver(1), ident, [m])
        assert conj == ident
