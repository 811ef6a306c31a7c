"""X-sequences, the metric d_X and X-diameters of finite right acts.

A step ``(x, y, s)`` of an X-sequence joins ``x s`` to ``y s``; ``s = None``
is the identity adjoined in S^1. Distances are shortest X-sequence lengths,
computed by breadth-first search on the step graph.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .acts import FiniteRightAct, act_of_semigroup, generated_congruence
from .core import FiniteSemigroup, opposite
from .errors import CapExceeded, NotAMonoid, RangeError, SearchBudgetExceeded
from .structure import green, kernel

EDGE_BUDGET = 10_000_000
DEFAULT_SEARCH_BUDGET = 200_000


@dataclass(frozen=True)
class GenSet:
    """Either an element set X (generating with X x X) or explicit pairs."""

    members: tuple
    mode: str = "set"

    def __post_init__(self):
        if self.mode not in ("set", "pairs"):
            raise RangeError(f"unknown GenSet mode {self.mode!r}")
        if self.mode == "set":
            members = tuple(sorted(set(int(x) for x in self.members)))
        else:
            members = tuple(sorted(set((int(x), int(y)) for x, y in self.members)))
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, X) -> "GenSet":
        return X if isinstance(X, GenSet) else cls(tuple(X))

    @classmethod
    def pairs(cls, pairs) -> "GenSet":
        return cls(tuple(pairs), "pairs")

    def pair_list(self) -> list:
        """Pairs spanning the relation; loops are dropped, they join nothing."""
        if self.mode == "set":
            return list(itertools.combinations(self.members, 2))
        return [(x, y) for x, y in self.members if x != y]

    def support(self) -> list:
        if self.mode == "set":
            return list(self.members)
        return sorted({z for p in self.members for z in p})

    def contains(self, x: int, y: int) -> bool:
        if self.mode == "set":
            return x in self.members and y in self.members
        return (x, y) in self.members or (y, x) in self.members

    def check_range(self, n: int) -> None:
        bad = [z for z in self.support() if not 0 <= z < n]
        if bad:
            raise RangeError(f"generator {bad[0]} outside carrier of size {n}")

    def to_json(self):
        if self.mode == "set":
            return {"mode": "set", "members": list(self.members)}
        return {"mode": "pairs", "members": [list(p) for p in self.members]}


@dataclass(frozen=True, eq=False)
class DiameterReport:
    genset: GenSet
    distances: np.ndarray  # float, np.inf where unreachable
    diameter: float  # int-valued or math.inf
    pair: tuple  # extremal (a, b)
    sequence: Optional[list]  # steps (x, y, s) joining a to b; None when infinite

    @property
    def finite(self) -> bool:
        return not math.isinf(self.diameter)

    def distance(self, a: int, b: int):
        d = self.distances[a, b]
        return math.inf if math.isinf(d) else int(d)

    def to_json(self, act: Optional[FiniteRightAct] = None) -> dict:
        def cell(d):
            return None if math.isinf(d) else int(d)

        return {
            "genset": self.genset.to_json(),
            "diameter": cell(self.diameter),
            "distances": [[cell(d) for d in row] for row in self.distances.tolist()],
            "witness": {
                "pair": list(self.pair),
                "sequence": None if self.sequence is None else [
                    {"x": x, "y": y, "s": s} for x, y, s in self.sequence
                ],
            },
        }


def _step_edges(A: FiniteRightAct, pairs):
    """Edge arrays (u, v, pair index, s) with s = -1 for the identity of S^1."""
    m = len(pairs)
    if m == 0:
        empty = np.zeros(0, dtype=np.intp)
        return empty, empty, empty, empty
    k = A.semigroup.order + 1
    if m * k > EDGE_BUDGET:
        raise CapExceeded(f"{m * k} step-graph edges exceed the budget of {EDGE_BUDGET}")
    p = np.asarray(pairs, dtype=np.intp)
    ext = np.hstack([A.action, np.arange(A.carrier_size)[:, None]])  # column -1 is the identity
    u = ext[p[:, 0]].reshape(-1)
    v = ext[p[:, 1]].reshape(-1)
    idx = np.repeat(np.arange(m), k)
    s = np.tile(np.append(np.arange(k - 1), -1), m)
    return u, v, idx, s


def _distances(A: FiniteRightAct, pairs, predecessors: bool = False):
    n = A.carrier_size
    u, v, _, _ = _step_edges(A, pairs)
    keep = u != v
    graph = coo_matrix((np.ones(int(keep.sum())), (u[keep], v[keep])), shape=(n, n)).tocsr()
    return shortest_path(graph, directed=False, unweighted=True, return_predecessors=predecessors)


def _extremal(dist: np.ndarray):
    diam = float(dist.max()) if dist.size else 0.0
    a, b = np.argwhere(dist == diam)[0]
    return diam, (int(a), int(b))


def distance_matrix(A: FiniteRightAct, X) -> DiameterReport:
    X = GenSet.of(X)
    X.check_range(A.carrier_size)
    pairs = X.pair_list()
    dist, pred = _distances(A, pairs, predecessors=True)
    diam, (a, b) = _extremal(dist)
    sequence = None
    if not math.isinf(diam):
        path = [b]
        while path[-1] != a:
            path.append(int(pred[a, path[-1]]))
        path.reverse()
        sequence = _label_path(A, pairs, path)
    return DiameterReport(X, dist, diam if math.isinf(diam) else int(diam), (a, b), sequence)


def _label_path(A: FiniteRightAct, pairs, path, edges=None) -> list:
    u, v, idx, s = _step_edges(A, pairs) if edges is None else edges
    steps = []
    for p, q in zip(path, path[1:]):
        hit = np.flatnonzero(((u == p) & (v == q)) | ((u == q) & (v == p)))[0]
        x, y = pairs[idx[hit]]
        if u[hit] != p:
            x, y = y, x
        steps.append((int(x), int(y), None if s[hit] < 0 else int(s[hit])))
    return steps


def validate_sequence(A: FiniteRightAct, X, a: int, b: int, steps) -> bool:
    """Check a = x1 s1, y1 s1 = x2 s2, ..., yk sk = b with each (xi, yi) from X."""
    X = GenSet.of(X)
    if not steps:
        return a == b
    current = a
    for x, y, s in steps:
        if not X.contains(x, y) or A.act(x, s) != current:
            return False
        current = A.act(y, s)
    return current == b


def is_generating(A: FiniteRightAct, X) -> bool:
    X = GenSet.of(X)
    X.check_range(A.carrier_size)
    if A.carrier_size == 1:
        return True
    return generated_congruence(A, X.pair_list()).is_universal


def right_diameter_report(S: FiniteSemigroup, X) -> DiameterReport:
    return distance_matrix(act_of_semigroup(S), X)


def left_diameter_report(S: FiniteSemigroup, X) -> DiameterReport:
    return distance_matrix(act_of_semigroup(opposite(S)), X)


@dataclass(frozen=True)
class MinDiameter:
    genset: Optional[GenSet]
    diameter: float
    evaluated: int


def min_diameter(A: FiniteRightAct, k: int, mode: str = "set", budget: int = DEFAULT_SEARCH_BUDGET) -> MinDiameter:
    """Least D(X, A) over |X| <= k; ties go to the lexicographically least X.

    Without the size bound the answer is at most 1 for any finite act
    (take X = A), so the bound is what makes the quantity informative.
    """
    if k < 1:
        raise RangeError("k must be at least 1")
    n = A.carrier_size
    if mode == "set":
        universe = list(range(n))
    elif mode == "pairs":
        universe = list(itertools.combinations(range(n), 2))
    else:
        raise RangeError(f"unknown mode {mode!r}")
    best_key = None
    best = None
    evaluated = 0
    for size in range(1, min(k, len(universe)) + 1):
        for combo in itertools.combinations(universe, size):
            if evaluated >= budget:
                raise SearchBudgetExceeded(
                    f"min_diameter evaluated {evaluated} candidates without finishing",
                    MinDiameter(best, math.inf if best_key is None else best_key[0], evaluated),
                )
            evaluated += 1
            X = GenSet(combo, mode)
            dist = _distances(A, X.pair_list())
            diam = float(dist.max())
            key = (diam, X.members)
            if best_key is None or key < best_key:
                best_key, best = key, X
    if best is None:  # mode "pairs" on a single point
        return MinDiameter(GenSet((0,)), 0, evaluated)
    diam = best_key[0]
    return MinDiameter(best if not math.isinf(diam) else None, diam if math.isinf(diam) else int(diam), evaluated)


def is_absorbing(S: FiniteSemigroup, V) -> bool:
    """For every a there are u, v in V with ua = v."""
    V = sorted(set(int(x) for x in V))
    if not V:
        return False
    inside = np.zeros(S.order, dtype=bool)
    inside[V] = True
    return bool(inside[S.table[V, :]].any(axis=0).all())


def absorbing_sets(S: FiniteSemigroup, max_size: int, budget: int = DEFAULT_SEARCH_BUDGET) -> Optional[tuple]:
    """A smallest absorbing set of size <= max_size, least in index order; None if there is none."""
    if not S.is_monoid:
        raise NotAMonoid("absorbing sets are defined for monoids")
    evaluated = 0
    for size in range(1, min(max_size, S.order) + 1):
        for V in itertools.combinations(range(S.order), size):
            evaluated += 1
            if evaluated > budget:
                raise SearchBudgetExceeded(f"absorbing set search exceeded {budget} candidates")
            if is_absorbing(S, V):
                return V
    return None


@dataclass(frozen=True)
class RadiusTwoWitness:
    X: tuple
    idempotent: int
    sequences: dict  # a -> [(x1, y1, s1), (x2, y2, s2)]


def special_right_radius_2(S: FiniteSemigroup) -> RadiusTwoWitness:
    """The witness X = {1} u R_e for the least kernel idempotent e.

    For each a: a = 1 a, e a = (ea) 1, 1 1 = 1, with x1 = 1 right invertible.
    """
    if not S.is_monoid:
        raise NotAMonoid("special right radius 2 is defined for monoids")
    one = S.identity
    if S.order == 1:
        return RadiusTwoWitness((one,), one, {one: []})
    kd = kernel(S)
    e = kd.rees.idempotent
    g = green(S)
    R_e = np.flatnonzero(g.R == g.R[e]).tolist()
    X = tuple(sorted({one, *R_e}))
    sequences = {}
    for a in range(S.order):
        ea = S.mul(e, a)
        sequences[a] = [(one, e, a), (ea, one, one)]
    witness = RadiusTwoWitness(X, e, sequences)
    if not validate_radius_two(S, witness):
        raise AssertionError("radius-2 witness failed re-validation")
    return witness


def validate_radius_two(S: FiniteSemigroup, w: RadiusTwoWitness) -> bool:
    one = S.identity
    A = act_of_semigroup(S)
    X = set(w.X)
    for a in range(S.order):
        steps = w.sequences[a]
        if not steps:
            if a != one:
                return False
            continue
        if len(steps) != 2 or not all(x in X and y in X for x, y, _ in steps):
            return False
        x1 = steps[0][0]
        if not (S.table[x1] == one).any():  # right invertible: x1 t = 1 for some t
            return False
        if not validate_sequence(A, GenSet(tuple(X)), a, one, steps):
            return False
    return True


def sequences_from(A: FiniteRightAct, X, source: int) -> dict:
    """Shortest X-sequences from ``source`` to every reachable point."""
    X = GenSet.of(X)
    X.check_range(A.carrier_size)
    pairs = X.pair_list()
    n = A.carrier_size
    edges = _step_edges(A, pairs)
    u, v = edges[0], edges[1]
    keep = u != v
    graph = coo_matrix((np.ones(int(keep.sum())), (u[keep], v[keep])), shape=(n, n)).tocsr()
    dist, pred = shortest_path(graph, directed=False, unweighted=True, indices=[source], return_predecessors=True)
    out = {}
    for b in range(n):
        if math.isinf(dist[0, b]):
            continue
        path = [b]
        while path[-1] != source:
            path.append(int(pred[0, path[-1]]))
        path.reverse()
        out[b] = _label_path(A, pairs, path, edges)
    return out
