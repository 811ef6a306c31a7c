"""Rees matrix semigroups and ideal extensions of them.

Element layout of an extension ``E(S, T; I, J; P)``: the elements of S, then
the adjoined identity, then the triples ``(i, t, j)`` in lexicographic order.
``coords`` lists ``("s", x)``, ``("1",)`` or ``("m", i, t, j)`` per element.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import FiniteSemigroup, find_identity, first_associativity_violation
from .errors import AssociativityError, CompatibilityError, GeneratorConditionError, NotAnAct, RangeError

EXHAUSTIVE_ASSOC_LIMIT = 2000
SAMPLED_TRIPLES = 100_000


@dataclass(frozen=True, eq=False)
class Built:
    """A constructed semigroup together with the coordinates of its elements."""

    semigroup: FiniteSemigroup
    coords: list
    exhaustively_checked: bool = True

    def index(self, coord) -> int:
        return self.coords.index(tuple(coord))


def rees_matrix(T: FiniteSemigroup, I_size: int, J_size: int, P) -> Built:
    """M[T; I, J; P] with (i, u, j)(k, v, m) = (i, u p[j, k] v, m); P is J x I."""
    P = np.asarray(P, dtype=np.intp)
    if P.shape != (J_size, I_size):
        raise RangeError(f"P has shape {P.shape}, expected {(J_size, I_size)}")
    if ((P < 0) | (P >= T.order)).any():
        raise RangeError("sandwich entries outside T")
    nt = T.order
    tt = T.table
    coords = [(i, u, j) for i in range(I_size) for u in range(nt) for j in range(J_size)]
    c = np.asarray(coords, dtype=np.intp).reshape(-1, 3)
    i, u, j = c[:, None, 0], c[:, None, 1], c[:, None, 2]
    k, v, m = c[None, :, 0], c[None, :, 1], c[None, :, 2]
    mid = tt[tt[u, P[j, k]], v]
    table = (np.broadcast_to(i, mid.shape) * nt + mid) * J_size + np.broadcast_to(m, mid.shape)
    labels = [f"({a},{T.label(b)},{d})" for a, b, d in coords]
    return Built(FiniteSemigroup(table, find_identity(table), labels), [("m",) + x for x in coords])


@dataclass(frozen=True, eq=False)
class ExtensionSpec:
    """Data for E(S, T; I, J; P).

    ``left_action[s, i]`` is ``s i`` on the left S-act I; ``right_action[j, s]``
    is ``j s`` on the right S-act J; ``P`` is J x I with entries in T.
    ``S`` may be None (the empty semigroup).
    """

    S: Optional[FiniteSemigroup]
    T: FiniteSemigroup
    I_size: int
    J_size: int
    left_action: np.ndarray
    right_action: np.ndarray
    P: np.ndarray

    @property
    def s_order(self) -> int:
        return 0 if self.S is None else self.S.order


def make_spec(S, T, I_size, J_size, P, left_action=None, right_action=None) -> ExtensionSpec:
    ns = 0 if S is None else S.order
    la = np.zeros((ns, I_size), dtype=np.intp) if left_action is None else np.asarray(left_action, dtype=np.intp)
    ra = np.zeros((J_size, ns), dtype=np.intp) if right_action is None else np.asarray(right_action, dtype=np.intp)
    return ExtensionSpec(S, T, I_size, J_size, la.reshape(ns, I_size), ra.reshape(J_size, ns), np.asarray(P, dtype=np.intp))


def check_spec(spec: ExtensionSpec) -> None:
    """Validate act axioms and the compatibility p[js, i] = p[j, si]."""
    ns = spec.s_order
    la, ra, P = spec.left_action, spec.right_action, spec.P
    if P.shape != (spec.J_size, spec.I_size):
        raise RangeError(f"P has shape {P.shape}, expected {(spec.J_size, spec.I_size)}")
    if ((P < 0) | (P >= spec.T.order)).any():
        raise RangeError("sandwich entries outside T")
    if la.shape != (ns, spec.I_size) or ra.shape != (spec.J_size, ns):
        raise RangeError("action tables have the wrong shape")
    if ns == 0:
        return
    if ((la < 0) | (la >= spec.I_size)).any() or ((ra < 0) | (ra >= spec.J_size)).any():
        raise RangeError("action values out of range")
    st = spec.S.table
    # s(t i) = (st) i and (j s) t = j (st)
    lhs = la[np.arange(ns)[:, None, None], la[None, :, :]]
    rhs = la[st[:, :, None], np.arange(spec.I_size)[None, None, :]]
    if not np.array_equal(lhs, rhs):
        raise NotAnAct("I is not a left S-act")
    lhs = ra[ra[:, :, None], np.arange(ns)[None, None, :]]
    rhs = ra[np.arange(spec.J_size)[:, None, None], st[None, :, :]]
    if not np.array_equal(lhs, rhs):
        raise NotAnAct("J is not a right S-act")
    # compat[j, s, i]: P[j s, i] vs P[j, s i]
    left = P[ra[:, :, None], np.arange(spec.I_size)[None, None, :]]
    right = P[np.arange(spec.J_size)[:, None, None], la[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        raise CompatibilityError(tuple(bad[0]))


def extension(spec: ExtensionSpec, verify: bool = True, seed: int = 0) -> Built:
    """The monoid S^1 u M[T; I, J; P] with s(i,t,j) = (si,t,j) and (i,t,j)s = (i,t,js)."""
    check_spec(spec)
    ns, nt, nI, nJ = spec.s_order, spec.T.order, spec.I_size, spec.J_size
    one = ns
    base = ns + 1
    n = base + nI * nt * nJ
    tt = spec.T.table
    P = spec.P
    # S^1 acting on indices, with the identity as action index ns
    la1 = np.vstack([spec.left_action, np.arange(nI)[None, :]])  # [s, i]
    ra1 = np.hstack([spec.right_action, np.arange(nJ)[:, None]])  # [j, s]

    def midx(i, t, j):
        return base + (i * nt + t) * nJ + j

    table = np.empty((n, n), dtype=np.intp)
    s1 = np.arange(ns + 1)
    if ns:
        table[:ns, :ns] = spec.S.table
    table[one, : ns + 1] = s1
    table[: ns + 1, one] = s1

    trip = np.array([(i, t, j) for i in range(nI) for t in range(nt) for j in range(nJ)], dtype=np.intp).reshape(-1, 3)
    mi, mt, mj = trip[:, 0], trip[:, 1], trip[:, 2]
    # s * (i, t, j) and (i, t, j) * s
    table[: ns + 1, base:] = midx(la1[s1[:, None], mi[None, :]], mt[None, :], mj[None, :])
    table[base:, : ns + 1] = midx(mi[:, None], mt[:, None], ra1[mj[:, None], s1[None, :]])
    mid = tt[tt[mt[:, None], P[mj[:, None], mi[None, :]]], mt[None, :]]
    table[base:, base:] = midx(mi[:, None], mid, mj[None, :])

    coords = [("s", x) for x in range(ns)] + [("1",)] + [("m", int(i), int(t), int(j)) for i, t, j in trip]
    s_label = (lambda x: spec.S.label(x)) if ns else str
    labels = [s_label(x) for x in range(ns)] + ["1"] + [f"({i},{spec.T.label(t)},{j})" for i, t, j in trip]
    exhaustive = True
    if verify:
        if n <= EXHAUSTIVE_ASSOC_LIMIT:
            bad = first_associativity_violation(table)
            if bad is not None:
                raise AssociativityError(bad)
        else:
            exhaustive = False
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, SAMPLED_TRIPLES))
            bad = np.flatnonzero(table[table[a, b], c] != table[a, table[b, c]])
            if bad.size:
                k = bad[0]
                raise AssociativityError((a[k], b[k], c[k]))
    return Built(FiniteSemigroup(table, one, labels), coords, exhaustive)


def generator_condition(S: FiniteSemigroup, Y) -> None:
    """Raise unless S = Y S^1 = S^1 Y."""
    from .structure import ideals

    Y = sorted(set(int(y) for y in Y))
    everything = list(range(S.order))
    if ideals(S, "right", Y) != everything:
        raise GeneratorConditionError(f"S != YS^1 for Y = {Y}")
    if ideals(S, "left", Y) != everything:
        raise GeneratorConditionError(f"S != S^1Y for Y = {Y}")


def e_of_spec(S: FiniteSemigroup, x: int, Y=None) -> ExtensionSpec:
    """The data of E(S, x): I = {i_s} u {0} with the regular actions and 0 absorbing.

    ``p[0, i] = p[i, 0] = x`` and ``p[i_s, i_t] = st``. I is ordered
    ``(i_0, ..., i_{n-1}, 0)``.
    """
    n = S.order
    Y = list(range(n)) if Y is None else sorted(set(int(y) for y in Y))
    generator_condition(S, Y)
    if int(x) not in Y:
        raise GeneratorConditionError(f"x = {x} is not in Y")
    zero = n
    st = S.table
    left = np.empty((n, n + 1), dtype=np.intp)
    left[:, :n] = st  # t i_s = i_{ts}
    left[:, zero] = zero
    right = np.empty((n + 1, n), dtype=np.intp)
    right[:n, :] = st  # i_s t = i_{st}
    right[zero, :] = zero
    P = np.empty((n + 1, n + 1), dtype=np.intp)
    P[:n, :n] = st
    P[zero, :] = x
    P[:, zero] = x
    return make_spec(S, S, n + 1, n + 1, P, left, right)


def e_of(S: FiniteSemigroup, x: int, Y=None, verify: bool = True) -> Built:
    return extension(e_of_spec(S, x, Y), verify=verify)


def extension_by_constants(S: FiniteSemigroup) -> Built:
    """S u {c_u} with c_u c_v = c_v, s c_u = c_u and c_u s = c_{us}."""
    n = S.order
    t = S.table
    table = np.empty((2 * n, 2 * n), dtype=np.intp)
    table[:n, :n] = t
    table[:n, n:] = np.arange(n, 2 * n)[None, :]
    table[n:, :n] = n + t
    table[n:, n:] = np.arange(n, 2 * n)[None, :]
    bad = first_associativity_violation(table)
    if bad is not None:
        raise AssociativityError(bad)
    labels = [S.label(x) for x in range(n)] + [f"c_{S.label(x)}" for x in range(n)]
    coords = [("s", x) for x in range(n)] + [("c", x) for x in range(n)]
    return Built(FiniteSemigroup(table, find_identity(table), labels), coords)


def with_identity(built: Built) -> Built:
    """Adjoin a new identity, keeping coordinates."""
    from .core import adjoin_identity

    return Built(adjoin_identity(built.semigroup), list(built.coords) + [("1",)], built.exhaustively_checked)
