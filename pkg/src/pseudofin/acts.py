"""Finite right S-acts, their congruences, generating sets and quotients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .core import FiniteSemigroup
from .errors import IllDefinedAction, NotACongruence, NotAnAct, NotARightIdeal, RangeError
from .structure import classes_of, green, kernel


@dataclass(frozen=True, eq=False)
class FiniteRightAct:
    """``action[a, s]`` is the index of ``a s``.

    ``elements`` optionally records what each carrier point stands for
    (a semigroup element, a pair, a class).
    """

    semigroup: FiniteSemigroup
    action: np.ndarray
    elements: Optional[tuple] = None
    labels: Optional[tuple] = None

    def __post_init__(self):
        arr = np.ascontiguousarray(self.action, dtype=np.intp)
        arr.setflags(write=False)
        object.__setattr__(self, "action", arr)

    @property
    def carrier_size(self) -> int:
        return self.action.shape[0]

    def act(self, a: int, s) -> int:
        """a s, where s = None stands for the adjoined identity of S^1."""
        return int(a) if s is None else int(self.action[a, s])

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def orbit_matrix(self) -> np.ndarray:
        """reach[a, b] iff b in a S^1."""
        n = self.carrier_size
        reach = np.zeros((n, n), dtype=bool)
        reach[np.arange(n)[:, None], self.action] = True
        reach[np.arange(n), np.arange(n)] = True
        return reach


def make_act(S: FiniteSemigroup, action, elements=None, labels=None) -> FiniteRightAct:
    """Validate (as)t = a(st) and, for monoids, a1 = a."""
    arr = np.asarray(action, dtype=np.intp)
    if arr.ndim != 2 or arr.shape[1] != S.order:
        raise NotAnAct(f"action table must be carrier x {S.order}, got {arr.shape}")
    n = arr.shape[0]
    if ((arr < 0) | (arr >= n)).any():
        raise RangeError("action values outside the carrier")
    lhs = arr[arr[:, :, None], np.arange(S.order)[None, None, :]]
    rhs = arr[np.arange(n)[:, None, None], S.table[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        a, s, t = bad[0]
        raise NotAnAct(f"(a s) t != a (s t) at (a, s, t) = ({a}, {s}, {t})")
    if S.identity is not None and not (arr[:, S.identity] == np.arange(n)).all():
        raise NotAnAct("identity does not act trivially")
    return FiniteRightAct(S, arr, None if elements is None else tuple(elements), None if labels is None else tuple(labels))


def act_of_semigroup(S: FiniteSemigroup) -> FiniteRightAct:
    return FiniteRightAct(S, S.table, tuple(range(S.order)), S.labels)


def act_of_right_ideal(S: FiniteSemigroup, R) -> FiniteRightAct:
    R = sorted(set(int(x) for x in R))
    if not R:
        raise NotARightIdeal("empty set")
    pos = np.full(S.order, -1, dtype=np.intp)
    pos[R] = np.arange(len(R))
    act = pos[S.table[R, :]]
    if (act < 0).any():
        r, s = np.argwhere(act < 0)[0]
        raise NotARightIdeal(f"{S.label(R[r])} * {S.label(s)} leaves the set")
    return FiniteRightAct(S, act, tuple(R), tuple(S.label(x) for x in R))


def diagonal_act(S: FiniteSemigroup) -> FiniteRightAct:
    """S x S with (a, b)c = (ac, bc); point (a, b) has index a*|S| + b."""
    n = S.order
    t = S.table
    a = np.repeat(np.arange(n), n)
    b = np.tile(np.arange(n), n)
    action = t[a] * n + t[b]
    elements = tuple(zip(a.tolist(), b.tolist()))
    labels = tuple(f"({S.label(x)},{S.label(y)})" for x, y in elements)
    return FiniteRightAct(S, action, elements, labels)


@dataclass(frozen=True)
class GeneratingSet:
    members: tuple
    exact: bool


def _action_graph(A: FiniteRightAct):
    n = A.carrier_size
    rows = np.repeat(np.arange(n), A.semigroup.order)
    return csr_matrix((np.ones(rows.size, dtype=np.int8), (rows, A.action.ravel())), shape=(n, n))


def min_generating_set(A: FiniteRightAct) -> GeneratingSet:
    """A minimum U with U S^1 = A.

    Orbits are closed under reachability, so U must meet every strongly
    connected component that no other component reaches, and the least point
    of each such component suffices. This is exact at any carrier size.
    """
    graph = _action_graph(A)
    _, comp = connected_components(graph, directed=True, connection="strong")
    src, dst = graph.nonzero()
    entered = np.zeros(comp.max() + 1, dtype=bool)
    entered[comp[dst][comp[src] != comp[dst]]] = True
    chosen = {}
    for a in range(A.carrier_size):
        c = comp[a]
        if not entered[c] and c not in chosen:
            chosen[c] = a
    return GeneratingSet(tuple(sorted(chosen.values())), True)


def generates(A: FiniteRightAct, U) -> bool:
    """Whether U S^1 is the whole carrier."""
    seen = np.zeros(A.carrier_size, dtype=bool)
    frontier = np.unique(np.asarray(list(U), dtype=np.intp))
    seen[frontier] = True
    while frontier.size:
        step = np.unique(A.action[frontier].ravel())
        frontier = step[~seen[step]]
        seen[frontier] = True
    return bool(seen.all())


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        parent = self.parent
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb
        return True


@dataclass(frozen=True, eq=False)
class ActCongruence:
    """A partition of the carrier; ``labels[a]`` is the least point of a's class."""

    labels: np.ndarray

    @property
    def is_universal(self) -> bool:
        return bool((self.labels == 0).all())

    def classes(self) -> list:
        return classes_of(self.labels)

    def related(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]


def generated_congruence(A: FiniteRightAct, pairs: Sequence) -> ActCongruence:
    """Least congruence containing the pairs.

    Every successful merge (a, b) queues the pairs (as, bs); the merged
    pairs form a spanning set of the equivalence, so this reaches the
    fixpoint.
    """
    n = A.carrier_size
    uf = _UnionFind(n)
    action = A.action.tolist()
    queue = []
    for a, b in pairs:
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise RangeError(f"pair ({a}, {b}) outside the carrier")
        if uf.union(a, b):
            queue.append((a, b))
    while queue:
        a, b = queue.pop()
        for x, y in zip(action[a], action[b]):
            if uf.union(x, y):
                queue.append((x, y))
    labels = np.array([uf.find(x) for x in range(n)], dtype=np.intp)
    return ActCongruence(labels)


def _canonical(labels) -> np.ndarray:
    """Relabel so each point carries the least point of its class."""
    canon = np.empty(len(labels), dtype=np.intp)
    first: dict = {}
    for a, lab in enumerate(np.asarray(labels).tolist()):
        canon[a] = first.setdefault(lab, a)
    return canon


def is_congruence(A: FiniteRightAct, labels) -> bool:
    """Whether the partition with these class labels is compatible with the action."""
    canon = _canonical(labels)
    moved = canon[A.action]
    return bool((moved == moved[canon]).all())


def quotient_act(A: FiniteRightAct, rho) -> FiniteRightAct:
    canon = _canonical(rho.labels if isinstance(rho, ActCongruence) else rho)
    if not is_congruence(A, canon):
        raise NotACongruence("partition is not compatible with the action")
    reps = sorted(set(canon.tolist()))
    pos = {r: i for i, r in enumerate(reps)}
    to_class = np.array([pos[int(c)] for c in canon], dtype=np.intp)
    action = to_class[A.action[reps]]
    return FiniteRightAct(A.semigroup, action, tuple(tuple(np.flatnonzero(canon == r).tolist()) for r in reps), None)


def quotient_map(rho) -> np.ndarray:
    """Carrier point -> index of its class in :func:`quotient_act`."""
    labels = np.asarray(rho.labels if isinstance(rho, ActCongruence) else rho)
    pos: dict = {}
    for lab in labels.tolist():
        pos.setdefault(lab, len(pos))
    return np.array([pos[lab] for lab in labels.tolist()], dtype=np.intp)


def r_class_mod_h_act(S: FiniteSemigroup, R) -> FiniteRightAct:
    """The action of S on the H-classes inside a kernel R-class."""
    g = green(S)
    R = sorted(set(int(x) for x in R))
    K = set(kernel(S).kernel_elements)
    if not R or not set(R) <= K or len({int(g.R[x]) for x in R}) != 1 or int((g.R == g.R[R[0]]).sum()) != len(R):
        raise RangeError("R must be a full R-class of the kernel")
    h_classes = classes_of(g.H, R)
    pos = np.full(S.order, -1, dtype=np.intp)
    for idx, cls in enumerate(h_classes):
        pos[cls] = idx
    t = S.table
    action = np.empty((len(h_classes), S.order), dtype=np.intp)
    for idx, cls in enumerate(h_classes):
        images = pos[t[cls, :]]
        if (images < 0).any() or not (images == images[0]).all():
            raise IllDefinedAction(f"H-class {cls} is not mapped to a single H-class of R")
        action[idx] = images[0]
    labels = tuple("{" + ",".join(S.label(x) for x in cls) + "}" for cls in h_classes)
    return FiniteRightAct(S, action, tuple(tuple(c) for c in h_classes), labels)
