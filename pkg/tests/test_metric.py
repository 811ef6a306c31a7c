import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import random_acts, small_monoids
from pseudofin import fixtures, metric
from pseudofin.acts import act_of_semigroup
from pseudofin.errors import CapExceeded, NotAMonoid, RangeError, SearchBudgetExceeded
from pseudofin.metric import (
    GenSet,
    absorbing_sets,
    distance_matrix,
    is_absorbing,
    is_generating,
    left_diameter_report,
    min_diameter,
    right_diameter_report,
    sequences_from,
    special_right_radius_2,
    validate_radius_two,
    validate_sequence,
)
from pseudofin.structure import green, kernel


def test_o2_diameter(O2):
    rep = right_diameter_report(O2, [0, 1])
    assert rep.diameter == 1
    assert validate_sequence(act_of_semigroup(O2), rep.genset, *rep.pair, rep.sequence)


def test_n3_diameter_and_witness(N3):
    A = act_of_semigroup(N3)
    rep = distance_matrix(A, [0, 1])
    assert rep.diameter == 2 and rep.pair == (0, 2)
    assert len(rep.sequence) == 2
    assert validate_sequence(A, rep.genset, 0, 2, rep.sequence)
    # the hand-derived chain 1 = 1*1, a*1 = a = 1*a, a*a = 0
    assert validate_sequence(A, rep.genset, 0, 2, [(0, 1, None), (0, 1, 1)])


def test_full_carrier_and_non_generating(N3, T2):
    assert distance_matrix(act_of_semigroup(T2), range(4)).diameter == 1
    rep = distance_matrix(act_of_semigroup(N3), [1, 2])
    assert math.isinf(rep.diameter) and rep.sequence is None
    assert math.isinf(rep.distances[0, 1]) and rep.distance(1, 2) == 1


def test_is_generating(N3):
    A = act_of_semigroup(N3)
    assert is_generating(A, [0, 1])
    assert not is_generating(A, [1, 2])
    assert is_generating(A, range(3))


def test_min_diameter_examples(N3):
    A = act_of_semigroup(N3)
    best = min_diameter(A, 2)
    assert best.diameter == 2 and best.genset.members == (0, 1)
    assert distance_matrix(A, [0, 2]).diameter == 2
    assert min_diameter(A, 3).diameter == 1
    assert min_diameter(act_of_semigroup(fixtures.trivial()), 1).diameter == 0


@pytest.mark.parametrize("name", ["n3", "t2", "rz2_1", "o2", "lz2_1"])
def test_min_diameter_matches_exhaustive_oracle(name):
    S = getattr(fixtures, name)()
    action = oracles.rows(S)
    for k in (1, 2, 3):
        best = math.inf
        for X in oracles.all_subsets(range(S.order), k):
            d = oracles.distances(action, oracles.set_pairs(X))
            best = min(best, max(max(row) for row in d))
        got = min_diameter(act_of_semigroup(S), k).diameter
        assert got == best


def test_left_and_right_reports(O2, RZ21, T2):
    assert right_diameter_report(O2, [0, 1]).diameter == left_diameter_report(O2, [0, 1]).diameter == 1
    assert right_diameter_report(RZ21, [2, 0, 1]).diameter == 1
    rep = right_diameter_report(T2, [0, 1, 2])
    assert rep.diameter == 2 and rep.distance(2, 3) == 2


def test_genset_modes():
    X = GenSet((3, 1, 1))
    assert X.members == (1, 3) and X.pair_list() == [(1, 3)]
    P = GenSet.pairs([(2, 0), (1, 1)])
    assert P.pair_list() == [(2, 0)] and P.contains(0, 2) and not P.contains(0, 1)
    with pytest.raises(RangeError):
        GenSet((0,), mode="bogus")
    with pytest.raises(RangeError):
        distance_matrix(act_of_semigroup(fixtures.o2()), [0, 5])


def check_metric(dist):
    n = dist.shape[0]
    assert (np.diag(dist) == 0).all()
    assert np.array_equal(dist, dist.T)
    for c in range(n):
        assert (dist <= dist[:, [c]] + dist[[c], :]).all()


@given(random_acts(max_carrier=7), st.data())
@settings(max_examples=60, deadline=None)
def test_distances_match_oracle_and_are_a_metric(A, data):
    n = A.carrier_size
    mode = data.draw(st.sampled_from(["set", "pairs"]))
    if mode == "set":
        X = GenSet(tuple(data.draw(st.sets(st.integers(0, n - 1), min_size=1))))
    else:
        point = st.integers(0, n - 1)
        X = GenSet.pairs(data.draw(st.lists(st.tuples(point, point), min_size=1, max_size=4)))
    rep = distance_matrix(A, X)
    expected = oracles.distances(A.action.tolist(), X.pair_list())
    assert rep.distances.tolist() == [[float(d) for d in row] for row in expected]
    check_metric(rep.distances)
    if rep.finite:
        assert len(rep.sequence) == rep.diameter
        assert validate_sequence(A, X, *rep.pair, rep.sequence)
    source = data.draw(st.integers(0, n - 1))
    for b, steps in sequences_from(A, X, source).items():
        assert len(steps) == rep.distance(source, b)
        assert validate_sequence(A, X, source, b, steps)


def test_validate_sequence_rejects_bad_steps(N3):
    A = act_of_semigroup(N3)
    assert not validate_sequence(A, [0, 1], 0, 2, [(0, 1, None)])
    assert not validate_sequence(A, [0, 1], 0, 2, [(0, 2, None), (0, 1, 1)])
    assert validate_sequence(A, [0, 1], 1, 1, [])


def test_edge_budget(monkeypatch, T2):
    monkeypatch.setattr(metric, "EDGE_BUDGET", 3)
    with pytest.raises(CapExceeded):
        distance_matrix(act_of_semigroup(T2), range(4))


def test_search_budget(T2):
    with pytest.raises(SearchBudgetExceeded) as info:
        min_diameter(act_of_semigroup(fixtures.full_transformation_monoid(3)), 3, budget=50)
    assert info.value.partial.evaluated == 50


def test_absorbing_examples(O2, RZ21):
    assert absorbing_sets(O2, 2) == (1,)
    assert absorbing_sets(RZ21, 3) == (0, 1)
    assert not is_absorbing(RZ21, [0])
    with pytest.raises(NotAMonoid):
        absorbing_sets(fixtures.rz2(), 2)


@given(small_monoids(max_degree=3))
@settings(max_examples=30, deadline=None)
def test_absorbing_oracle_and_kernel_r_class(S):
    t = oracles.rows(S)

    def absorbing(V):
        return all(any(t[u][a] in V for u in V) for a in range(S.order))

    smallest = next((V for V in oracles.all_subsets(range(S.order), min(S.order, 3)) if absorbing(set(V))), None)
    assert absorbing_sets(S, 3) == smallest
    g = green(S)
    e = kernel(S).rees.idempotent
    assert is_absorbing(S, np.flatnonzero(g.R == g.R[e]))


def test_special_radius_two(O2, T2):
    w = special_right_radius_2(O2)
    assert set(w.X) == {0, 1}
    assert validate_radius_two(O2, w)
    wt = special_right_radius_2(T2)
    assert set(wt.X) == {0, 2, 3}
    A = act_of_semigroup(T2)
    assert validate_sequence(A, wt.X, 1, 0, wt.sequences[1])
    triv = special_right_radius_2(fixtures.trivial())
    assert triv.X == (0,) and triv.sequences == {0: []}


@given(small_monoids())
@settings(max_examples=30, deadline=None)
def test_special_radius_two_always_validates(S):
    assert validate_radius_two(S, special_right_radius_2(S))


def test_report_json(N3):
    rep = right_diameter_report(N3, [1, 2])
    js = rep.to_json()
    assert js["diameter"] is None and js["witness"]["sequence"] is None
    js2 = right_diameter_report(N3, [0, 1]).to_json()
    first = js2["witness"]["sequence"][0]
    assert js2["diameter"] == 2 and (first["x"], first["y"]) == (0, 1)
    assert first["s"] in (None, N3.identity)
