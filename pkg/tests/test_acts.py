import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import random_acts
from pseudofin import fixtures
from pseudofin.acts import (
    ActCongruence,
    act_of_right_ideal,
    act_of_semigroup,
    diagonal_act,
    generated_congruence,
    generates,
    is_congruence,
    make_act,
    min_generating_set,
    quotient_act,
    quotient_map,
    r_class_mod_h_act,
)
from pseudofin.errors import NotACongruence, NotAnAct, NotARightIdeal, RangeError


def partition(rho):
    return {frozenset(c) for c in rho.classes()}


def test_act_of_semigroup(O2, T2, N3):
    assert act_of_semigroup(O2).carrier_size == 2
    assert np.array_equal(act_of_semigroup(T2).action, T2.table)
    assert act_of_semigroup(N3).carrier_size == 3


def test_act_of_right_ideal(T2, N3):
    A = act_of_right_ideal(T2, [2, 3])
    assert A.carrier_size == 2 and A.act(0, 1) == 1 and A.act(1, 1) == 0
    K = act_of_right_ideal(N3, [2])
    assert K.action.tolist() == [[0, 0, 0]]
    assert np.array_equal(act_of_right_ideal(T2, range(4)).action, T2.table)
    with pytest.raises(NotARightIdeal):
        act_of_right_ideal(T2, [1])


def test_diagonal_act(Z2, O2, T2):
    assert diagonal_act(Z2).carrier_size == 4
    D = diagonal_act(O2)
    zz = 1 * 2 + 1
    assert D.carrier_size == 4 and (D.action[zz] == zz).all()
    assert diagonal_act(T2).carrier_size == 16


def test_make_act_validates(T2):
    with pytest.raises(NotAnAct):
        make_act(T2, [[0, 0, 0, 0]] * 2)  # identity must act trivially
    with pytest.raises(RangeError):
        make_act(T2, [[0, 1, 5, 1]])
    with pytest.raises(NotAnAct):
        make_act(T2, [[0, 1, 0, 0], [1, 0, 1, 1]])  # fails (a s) t = a (s t)


@given(random_acts())
@settings(max_examples=40, deadline=None)
def test_random_acts_satisfy_the_act_law(A):
    assert oracles.is_act(A.action.tolist(), oracles.rows(A.semigroup))


def test_min_generating_set_examples(Z2):
    U = min_generating_set(diagonal_act(Z2))
    assert len(U.members) == 2 and U.exact
    assert min_generating_set(act_of_semigroup(fixtures.t2())).members == (0,)
    assert len(min_generating_set(diagonal_act(fixtures.trivial())).members) == 1


@given(random_acts(max_carrier=7))
@settings(max_examples=40, deadline=None)
def test_min_generating_set_is_minimum(A):
    action = A.action.tolist()
    U = min_generating_set(A).members
    assert oracles.generated_by(action, U) == set(range(A.carrier_size))
    assert generates(A, U)
    # no smaller subset generates
    smaller = [V for V in oracles.all_subsets(range(A.carrier_size), len(U) - 1)
               if oracles.generated_by(action, V) == set(range(A.carrier_size))]
    assert not smaller


def test_generated_congruence_examples(N3, T2):
    assert generated_congruence(act_of_semigroup(N3), [(0, 1)]).is_universal
    assert partition(generated_congruence(act_of_semigroup(N3), [])) == {frozenset({a}) for a in range(3)}
    rho = generated_congruence(act_of_semigroup(T2), [(0, 2)])
    assert partition(rho) == {frozenset({0, 2}), frozenset({1, 3})}
    with pytest.raises(RangeError):
        generated_congruence(act_of_semigroup(T2), [(0, 9)])


@given(random_acts(max_carrier=8), st.data())
@settings(max_examples=60, deadline=None)
def test_generated_congruence_matches_oracle(A, data):
    n = A.carrier_size
    point = st.integers(0, n - 1)
    pairs = data.draw(st.lists(st.tuples(point, point), max_size=3))
    rho = generated_congruence(A, pairs)
    expected = oracles.partition_of(oracles.congruence(A.action.tolist(), pairs), n)
    assert partition(rho) == expected
    assert is_congruence(A, rho.labels)


def test_is_congruence(T2):
    A = act_of_semigroup(T2)
    assert is_congruence(A, [0, 1, 0, 1])
    assert is_congruence(A, [0, 0, 2, 3])  # {id, s} is a right congruence class
    assert is_congruence(A, [7, 7, 5, 9])  # labels need not be class members
    assert not is_congruence(A, [0, 1, 0, 3])  # id ~ c0 but s !~ c1


def test_quotients(T2):
    A = act_of_semigroup(T2)
    ident = generated_congruence(A, [])
    Q = quotient_act(A, ident)
    assert np.array_equal(Q.action, A.action)
    U = quotient_act(A, ActCongruence(np.zeros(4, dtype=np.intp)))
    assert U.carrier_size == 1
    rho = generated_congruence(A, [(0, 2)])
    Q2 = quotient_act(A, rho)
    assert Q2.carrier_size == 2
    qm = quotient_map(rho)
    for a in range(4):
        for s in range(4):
            assert Q2.act(qm[a], s) == qm[A.act(a, s)]
    with pytest.raises(NotACongruence):
        quotient_act(A, [0, 1, 0, 3])


def test_r_class_mod_h(T2, Z2):
    A = r_class_mod_h_act(T2, [2, 3])
    assert A.carrier_size == 2 and A.act(0, 1) == 1 and A.act(1, 1) == 0
    assert r_class_mod_h_act(Z2, [0, 1]).carrier_size == 1
    # trivial H-classes: the act is R acting on itself
    R = act_of_right_ideal(T2, [2, 3])
    assert np.array_equal(A.action, R.action)
    with pytest.raises(RangeError):
        r_class_mod_h_act(T2, [2])


def test_r_class_mod_h_on_rees():
    M = fixtures.rees_z2_sandwich().semigroup
    from pseudofin.structure import green, kernel

    g = green(M)
    e = kernel(M).rees.idempotent
    R = np.flatnonzero(g.R == g.R[e]).tolist()
    A = r_class_mod_h_act(M, R)
    assert A.carrier_size == 2  # two L-classes, groups of order 2
