"""Green's relations, ideals, the kernel and its Rees coordinates, class predicates.

Preorder matrices are indexed ``leq[a, b] == (a <= b)``. Partitions are
stored as label arrays whose value is the least element of each class.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import FiniteSemigroup, idempotent_power, subsemigroup
from .errors import DecompositionError, EmptyGenerators, NotABand, RangeError

RELATIONS = ("L", "R", "H", "D", "J")


def _labels(equiv: np.ndarray) -> np.ndarray:
    # first True in each row is the least element of the class
    lab = np.argmax(equiv, axis=1)
    lab.setflags(write=False)
    return lab


def classes_of(labels: np.ndarray, within=None) -> list[list[int]]:
    """Group element indices by label, classes ordered by least element."""
    groups: dict[int, list[int]] = {}
    elems = range(len(labels)) if within is None else sorted(int(x) for x in within)
    for x in elems:
        groups.setdefault(int(labels[x]), []).append(x)
    return [groups[k] for k in sorted(groups, key=lambda k: groups[k][0])]


def _bool_compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


@dataclass(frozen=True, eq=False)
class GreenData:
    leq_L: np.ndarray
    leq_R: np.ndarray
    leq_J: np.ndarray
    L: np.ndarray
    R: np.ndarray
    H: np.ndarray
    D: np.ndarray
    J: np.ndarray
    d_equals_j: bool

    def classes(self, relation: str) -> list[list[int]]:
        return classes_of(getattr(self, relation))

    def count(self, relation: str) -> int:
        return len(np.unique(getattr(self, relation)))


def green(S: FiniteSemigroup) -> GreenData:
    """All Green's preorders and relations of S (cached on S)."""
    cached = S._cache.get("green")
    if cached is not None:
        return cached
    n = S.order
    t = S.table
    cols = np.broadcast_to(np.arange(n)[None, :], (n, n))
    leq_R = np.zeros((n, n), dtype=bool)
    leq_R[t, cols.T] = True  # t[b, s] <=_R b
    leq_R[np.arange(n), np.arange(n)] = True
    leq_L = np.zeros((n, n), dtype=bool)
    leq_L[t, cols] = True  # t[s, b] <=_L b
    leq_L[np.arange(n), np.arange(n)] = True
    # a in S^1 b S^1 iff a <=_L c <=_R b for some c
    leq_J = _bool_compose(leq_L, leq_R)

    Lrel = leq_L & leq_L.T
    Rrel = leq_R & leq_R.T
    Hrel = Lrel & Rrel
    Drel = _bool_compose(Rrel, Lrel)
    Jrel = leq_J & leq_J.T
    for small, big in ((Hrel, Lrel), (Hrel, Rrel), (Lrel, Drel), (Rrel, Drel), (Drel, Jrel)):
        if (small & ~big).any():
            raise DecompositionError("Green's relation inclusions violated")
    for m in (leq_L, leq_R, leq_J):
        m.setflags(write=False)
    data = GreenData(
        leq_L, leq_R, leq_J,
        _labels(Lrel), _labels(Rrel), _labels(Hrel), _labels(Drel), _labels(Jrel),
        bool(np.array_equal(Drel, Jrel)),
    )
    S._cache["green"] = data
    return data


def is_left_compatible(S: FiniteSemigroup, preorder: str = "L"):
    """Whether u <= v implies au <= av; returns (flag, first counterexample (a, u, v))."""
    g = green(S)
    leq = {"L": g.leq_L, "J": g.leq_J}[preorder]
    t = S.table
    for a in range(S.order):
        row = t[a]
        bad = np.argwhere(leq & ~leq[np.ix_(row, row)])
        if bad.size:
            u, v = bad[0]
            return False, (a, int(u), int(v))
    return True, None


def l_star(S: FiniteSemigroup) -> np.ndarray:
    """L* labels: a ~ b iff ax = ay <=> bx = by for all x, y in S^1."""
    n = S.order
    keys: dict = {}
    lab = np.empty(n, dtype=np.intp)
    for a in range(n):
        column = list(S.table[a, :]) + [a]  # last entry is a*1
        first: dict = {}
        key = tuple(first.setdefault(v, len(first)) for v in column)
        lab[a] = keys.setdefault(key, a)
    return lab


def ideals(S: FiniteSemigroup, side: str, generators) -> list[int]:
    """XS^1 (right), S^1X (left) or S^1XS^1 (two-sided) as a sorted list."""
    gens = sorted(set(int(x) for x in generators))
    if not gens:
        raise EmptyGenerators("ideal needs at least one generator")
    t = S.table
    out = set(gens)
    if side in ("right", "two-sided"):
        out.update(t[gens, :].ravel().tolist())
    if side == "left":
        out.update(t[:, gens].ravel().tolist())
    elif side == "two-sided":
        out.update(t[:, gens].ravel().tolist())
        right = t[gens, :].ravel()
        out.update(t[:, right].ravel().tolist())
    elif side != "right":
        raise ValueError(f"unknown side {side!r}")
    return sorted(out)


def is_left_simple(S: FiniteSemigroup, elements) -> bool:
    elems = sorted(int(x) for x in elements)
    target = set(elems)
    for x in elems:
        if set(S.table[elems, x].tolist()) | {x} != target:
            return False
    return True


def minimal_one_sided_ideals(S: FiniteSemigroup, side: str) -> list[list[int]]:
    """All minimal left (or right) ideals, ordered by least element."""
    g = green(S)
    leq = {"left": g.leq_L, "right": g.leq_R}[side]
    minimal = np.all(~leq | leq.T, axis=0)  # nothing strictly below a
    found: dict = {}
    for a in np.flatnonzero(minimal):
        members = tuple(np.flatnonzero(leq[:, a]).tolist())
        found.setdefault(members, None)
    result = sorted((list(m) for m in found), key=lambda m: m[0])
    check = S if side == "left" else _opposite(S)
    for ideal in result:
        if not is_left_simple(check, ideal):
            raise DecompositionError(f"minimal {side} ideal {ideal} is not {side} simple")
    return result


def _opposite(S):
    from .core import opposite

    return opposite(S)


def has_zero(S: FiniteSemigroup) -> Optional[int]:
    t = S.table
    for z in range(S.order):
        if (t[z] == z).all() and (t[:, z] == z).all():
            return z
    return None


def local_zeros(S: FiniteSemigroup, a: int) -> list[int]:
    t = S.table
    return [int(e) for e in S.idempotents() if t[a, e] == e and t[e, a] == e]


@dataclass(frozen=True, eq=False)
class ReesMatrixData:
    """Rees coordinates of a completely simple kernel.

    ``I`` indexes the R-classes and ``J`` the L-classes of the kernel, the
    class of the chosen idempotent first. ``P`` is J_size x I_size with
    entries in ``group_table`` indices, in normal form.
    """

    group_table: FiniteSemigroup
    group_elements: np.ndarray
    I_size: int
    J_size: int
    P: np.ndarray
    iso: dict
    idempotent: int

    def rebuild(self):
        from .constructions import rees_matrix

        return rees_matrix(self.group_table, self.I_size, self.J_size, self.P)

    def is_normal(self) -> bool:
        one = self.group_table.identity
        return bool((self.P[0, :] == one).all() and (self.P[:, 0] == one).all())


@dataclass(frozen=True, eq=False)
class KernelData:
    kernel_elements: list
    is_completely_simple: bool
    minimal_left_ideals: list
    minimal_right_ideals: list
    rees: Optional[ReesMatrixData]


def kernel_elements(S: FiniteSemigroup) -> list[int]:
    g = green(S)
    bottom = np.flatnonzero(g.leq_J.all(axis=1))
    if bottom.size == 0:
        raise DecompositionError("finite semigroup without a minimum J-class")
    return np.flatnonzero(g.J == g.J[bottom[0]]).tolist()


def least_kernel_idempotent(S: FiniteSemigroup) -> int:
    K = kernel_elements(S)
    t = S.table
    for k in K:
        if t[k, k] == k:
            return k
    raise DecompositionError("kernel has no idempotent")


def _group_inverse(G: FiniteSemigroup) -> np.ndarray:
    one = G.identity
    inv = np.argmax(G.table == one, axis=1)
    return inv


def rees_decomposition(S: FiniteSemigroup, K: list[int]) -> ReesMatrixData:
    """Rees coordinates for a completely simple ideal K of S, verified exhaustively."""
    g = green(S)
    t = S.table
    Kset = set(K)
    e = next(k for k in K if t[k, k] == k)
    r_classes = classes_of(g.R, K)
    l_classes = classes_of(g.L, K)
    r_classes.sort(key=lambda c: (e not in c, c[0]))
    l_classes.sort(key=lambda c: (e not in c, c[0]))
    Ge = [k for k in K if g.H[k] == g.H[e]]
    G, g_elems = subsemigroup(S, Ge)
    if G.identity is None:
        raise DecompositionError("H-class of the idempotent is not a group")
    gpos = {int(x): i for i, x in enumerate(g_elems)}
    Le, Re = set(l_classes[0]), set(r_classes[0])
    reps_r = [e] + [min(x for x in c if x in Le) for c in r_classes[1:]]
    reps_q = [e] + [min(x for x in c if x in Re) for c in l_classes[1:]]
    I_size, J_size = len(r_classes), len(l_classes)

    raw = {}
    for i, r in enumerate(reps_r):
        for gi, x in enumerate(g_elems):
            rx = t[r, x]
            for lam, q in enumerate(reps_q):
                raw[int(t[rx, q])] = (i, gi, lam)
    if set(raw) != Kset or len(raw) != I_size * len(g_elems) * J_size:
        raise DecompositionError("class representatives do not parametrise the kernel")

    gt = G.table
    inv = _group_inverse(G)
    P = np.empty((J_size, I_size), dtype=np.intp)
    for lam, q in enumerate(reps_q):
        for i, r in enumerate(reps_r):
            p = int(t[q, r])
            if p not in gpos:
                raise DecompositionError(f"sandwich entry {p} outside the group")
            P[lam, i] = gpos[p]
    # translate so that row 0 and column 0 become the identity
    a = P[0, :].copy()
    b = gt[P[:, 0], inv[P[0, 0]]]
    Pn = np.empty_like(P)
    for lam in range(J_size):
        for i in range(I_size):
            Pn[lam, i] = gt[gt[gt[P[0, 0], inv[P[lam, 0]]], P[lam, i]], inv[P[0, i]]]
    iso = {x: (i, int(gt[gt[a[i], gi], b[lam]]), lam) for x, (i, gi, lam) in raw.items()}

    Pn.setflags(write=False)
    data = ReesMatrixData(G, g_elems, I_size, J_size, Pn, iso, e)
    _verify_rees(S, K, data)
    return data


def _verify_rees(S: FiniteSemigroup, K: list[int], data: ReesMatrixData) -> None:
    t = S.table
    gt = data.group_table.table
    Ka = np.asarray(K, dtype=np.intp)
    coords = np.array([data.iso[int(x)] for x in Ka], dtype=np.intp)
    if not data.is_normal():
        raise DecompositionError("sandwich matrix not in normal form")
    # image of x*y computed in M[G; I, J; P]
    i = coords[:, None, 0]
    gx = coords[:, None, 1]
    lam = coords[:, None, 2]
    k = coords[None, :, 0]
    gy = coords[None, :, 1]
    mu = coords[None, :, 2]
    mid = gt[gt[gx, data.P[lam, k]], gy]
    prod = t[np.ix_(Ka, Ka)]
    lookup = np.array([data.iso[int(x)] for x in prod.ravel()], dtype=np.intp).reshape(len(K), len(K), 3)
    if not (
        (lookup[..., 0] == np.broadcast_to(i, lookup.shape[:2])).all()
        and (lookup[..., 1] == mid).all()
        and (lookup[..., 2] == np.broadcast_to(mu, lookup.shape[:2])).all()
    ):
        raise DecompositionError("Rees coordinates are not a homomorphism")


def kernel(S: FiniteSemigroup) -> KernelData:
    cached = S._cache.get("kernel")
    if cached is not None:
        return cached
    K = kernel_elements(S)
    t = S.table
    closed = set(t[np.ix_(K, K)].ravel().tolist()) <= set(K)
    has_idem = any(t[k, k] == k for k in K)
    simple = False
    if closed:
        sub, _ = subsemigroup(S, K)
        simple = green(sub).count("J") == 1
    cs = bool(closed and simple and has_idem)
    data = KernelData(
        K, cs,
        minimal_one_sided_ideals(S, "left"),
        minimal_one_sided_ideals(S, "right"),
        rees_decomposition(S, K) if cs else None,
    )
    S._cache["kernel"] = data
    return data


@dataclass(frozen=True)
class Predicates:
    regular: bool
    inverse: bool
    orthodox: bool
    completely_regular: bool
    band: bool
    semilattice: bool
    commutative: bool
    group: bool
    J_trivial: bool
    left_cancellative: bool
    right_reversible: bool


def principal_left_ideals_meet(S: FiniteSemigroup) -> np.ndarray:
    """meet[a, b] iff Sa and Sb intersect (u, v drawn from S, not S^1)."""
    n = S.order
    member = np.zeros((n, n), dtype=bool)
    member[np.arange(n)[:, None], S.table.T] = True  # member[a, x]: x in Sa
    return _bool_compose(member, member.T)


def weakly_right_reversible(S: FiniteSemigroup) -> bool:
    """Always true for a finite semigroup.

    Any infinite sequence Sa_1, Sa_2, ... repeats a principal left ideal, and
    Sa_i = Sa_j is non-empty, so two members always intersect.
    """
    return True


def is_regular_element(S: FiniteSemigroup) -> np.ndarray:
    t = S.table
    n = S.order
    aba = t[t, np.arange(n)[:, None]]  # [a, b] = (ab)a
    return (aba == np.arange(n)[:, None]).any(axis=1)


def idempotent_generated(S: FiniteSemigroup) -> bool:
    E = set(S.idempotents().tolist())
    span = set(E)
    frontier = set(E)
    t = S.table
    while frontier:
        fresh = set()
        for x in frontier:
            for f in E:
                y = int(t[x, f])
                if y not in span:
                    fresh.add(y)
        span |= fresh
        frontier = fresh
    return len(span) == S.order


def predicates(S: FiniteSemigroup) -> Predicates:
    t = S.table
    n = S.order
    ar = np.arange(n)
    g = green(S)
    reg_each = is_regular_element(S)
    regular = bool(reg_each.all())
    aba = t[t, ar[:, None]] == ar[:, None]
    bab = t[t.T, ar[None, :]] == ar[None, :]  # [a, b] = (ba)b == b
    inverse = regular and bool(((aba & bab).sum(axis=1) == 1).all())
    E = S.idempotents()
    e_closed = bool(np.isin(t[np.ix_(E, E)], E).all())
    sq = t[ar, ar]
    commutative = bool(np.array_equal(t, t.T))
    band = len(E) == n
    if S.identity is not None:
        group = bool((t == S.identity).any(axis=1).all()) and bool((t == S.identity).any(axis=0).all())
    else:
        group = False
    return Predicates(
        regular=regular,
        inverse=inverse,
        orthodox=regular and e_closed,
        completely_regular=bool((g.H[sq] == g.H).all()),
        band=band,
        semilattice=band and commutative,
        commutative=commutative,
        group=group,
        J_trivial=bool((g.J == ar).all()),
        left_cancellative=all(len(np.unique(row)) == n for row in t),
        right_reversible=bool(principal_left_ideals_meet(S).all()),
    )


def h_class(S: FiniteSemigroup, a: int) -> list[int]:
    g = green(S)
    return np.flatnonzero(g.H == g.H[a]).tolist()


def idempotent_in_h_class(S: FiniteSemigroup, a: int) -> Optional[int]:
    t = S.table
    for x in h_class(S, a):
        if t[x, x] == x:
            return x
    return None


@dataclass(frozen=True, eq=False)
class BandDecomposition:
    semilattice: FiniteSemigroup
    blocks: list
    projection: np.ndarray


def band_decomposition(S: FiniteSemigroup) -> BandDecomposition:
    """A band as a semilattice of rectangular bands (its D-classes)."""
    t = S.table
    n = S.order
    if not (t[np.arange(n), np.arange(n)] == np.arange(n)).all():
        raise NotABand("not every element is idempotent")
    g = green(S)
    blocks = classes_of(g.D)
    proj = np.empty(n, dtype=np.intp)
    for idx, block in enumerate(blocks):
        proj[block] = idx
        sub = np.asarray(block)
        xyx = t[t[np.ix_(sub, sub)], sub[:, None]]
        if not (xyx == sub[:, None]).all():
            raise DecompositionError(f"D-class {block} is not a rectangular band")
    reps = [b[0] for b in blocks]
    Y = FiniteSemigroup(proj[t[np.ix_(reps, reps)]], None, None)
    from .core import find_identity

    Y = FiniteSemigroup(Y.table, find_identity(Y.table), None)
    ok, violation = verify_semilattice_of_subsemigroups(S, blocks, Y)
    if not ok:
        raise DecompositionError(f"band decomposition fails: {violation}")
    proj.setflags(write=False)
    return BandDecomposition(Y, blocks, proj)


def verify_semilattice_of_subsemigroups(S: FiniteSemigroup, partition, Y: FiniteSemigroup):
    """Check that S is the semilattice Y of the given blocks; returns (ok, violation)."""
    yt = Y.table
    m = Y.order
    if len(partition) != m:
        return False, f"{len(partition)} blocks for a semilattice of order {m}"
    ar = np.arange(m)
    if not (yt[ar, ar] == ar).all() or not np.array_equal(yt, yt.T):
        return False, "index structure is not a semilattice"
    proj = np.full(S.order, -1, dtype=np.intp)
    for idx, block in enumerate(partition):
        for x in block:
            if proj[x] != -1:
                return False, f"element {x} lies in blocks {proj[x]} and {idx}"
            proj[x] = idx
    missing = np.flatnonzero(proj < 0)
    if missing.size:
        return False, f"element {int(missing[0])} lies in no block"
    t = S.table
    for a in range(S.order):
        for b in range(S.order):
            ab = t[a, b]
            if proj[ab] != yt[proj[a], proj[b]]:
                return False, (a, b, int(ab))
    return True, None


def is_group(S: FiniteSemigroup) -> bool:
    return predicates(S).group


def left_zero_times_group_iso(S: FiniteSemigroup) -> Optional[dict]:
    """An explicit isomorphism kernel -> (left zero) x G when the kernel is left simple.

    Returns None when the kernel has more than one L-class.
    """
    kd = kernel(S)
    rees = kd.rees
    if rees is None or rees.J_size != 1:
        return None
    gt = rees.group_table.table
    iso = {x: (i, g) for x, (i, g, _) in rees.iso.items()}
    t = S.table
    for x, (i, gx) in iso.items():
        for y, (_, gy) in iso.items():
            if iso[int(t[x, y])] != (i, int(gt[gx, gy])):
                raise DecompositionError("left zero x group coordinates fail")
    return iso


def check_range(S: FiniteSemigroup, elements) -> None:
    for x in elements:
        if not 0 <= int(x) < S.order:
            raise RangeError(f"element {x} out of range")


def idempotent_powers(S: FiniteSemigroup) -> list:
    return [idempotent_power(S, a) for a in range(S.order)]
