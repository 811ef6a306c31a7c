"""Brute-force reference implementations used as test oracles.

Everything here works from the raw definitions with plain loops and sets,
sharing no code with the package.
"""
from __future__ import annotations

import itertools
import math

import numpy as np


def rows(S):
    return [list(map(int, r)) for r in S.table]


def assoc_violation(t):
    n = len(t)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    return (a, b, c)
    return None


def s1(t):
    """Elements of S^1 as a list; None is the adjoined identity."""
    return [None] + list(range(len(t)))


def mul(t, a, b):
    if a is None:
        return b
    if b is None:
        return a
    return t[a][b]


def principal(t, a, side):
    """S^1 a (left), a S^1 (right) or S^1 a S^1 (two)."""
    out = set()
    for u in s1(t):
        for v in s1(t):
            if side == "left" and v is None:
                out.add(mul(t, u, a))
            elif side == "right" and u is None:
                out.add(mul(t, a, v))
            elif side == "two":
                out.add(mul(t, mul(t, u, a), v))
    return frozenset(out)


def green_partitions(t):
    """Classes of L, R, H, J as sets of frozensets."""
    n = len(t)
    Lp = [principal(t, a, "left") for a in range(n)]
    Rp = [principal(t, a, "right") for a in range(n)]
    Jp = [principal(t, a, "two") for a in range(n)]

    def part(key):
        groups = {}
        for a in range(n):
            groups.setdefault(key(a), set()).add(a)
        return {frozenset(g) for g in groups.values()}

    return {
        "L": part(lambda a: Lp[a]),
        "R": part(lambda a: Rp[a]),
        "H": part(lambda a: (Lp[a], Rp[a])),
        "J": part(lambda a: Jp[a]),
    }


def kernel(t):
    """Intersection of all principal two-sided ideals."""
    n = len(t)
    K = set(range(n))
    for a in range(n):
        K &= principal(t, a, "two")
    return frozenset(K)


def minimal_left_ideals(t):
    ideals = {principal(t, a, "left") for a in range(len(t))}
    return {I for I in ideals if not any(J < I for J in ideals)}


def minimal_right_ideals(t):
    ideals = {principal(t, a, "right") for a in range(len(t))}
    return {I for I in ideals if not any(J < I for J in ideals)}


def congruence(action, pairs):
    """Least right congruence by iterating reflexive/symmetric/transitive/compatible closure."""
    n = len(action)
    rel = {(a, a) for a in range(n)} | {(a, b) for a, b in pairs} | {(b, a) for a, b in pairs}
    while True:
        new = set(rel)
        for a, b in rel:
            for s in range(len(action[0])):
                new.add((action[a][s], action[b][s]))
        for a, b in list(new):
            for c, d in list(new):
                if b == c:
                    new.add((a, d))
        if new == rel:
            return rel
        rel = new


def partition_of(rel, n):
    return {frozenset(b for b in range(n) if (a, b) in rel) for a in range(n)}


def distances(action, pairs):
    """d(a, b) as the least k with (a, b) in R^k, R = {(xs, ys)} u its inverse u equality."""
    n = len(action)
    m = len(action[0]) if n else 0
    step = [[a == b for b in range(n)] for a in range(n)]
    for x, y in pairs:
        for s in [None] + list(range(m)):
            p = x if s is None else action[x][s]
            q = y if s is None else action[y][s]
            step[p][q] = step[q][p] = True
    dist = [[math.inf] * n for _ in range(n)]
    reach = [[a == b for b in range(n)] for a in range(n)]
    k = 0
    while True:
        changed = False
        for a in range(n):
            for b in range(n):
                if reach[a][b] and dist[a][b] == math.inf:
                    dist[a][b] = k
                    changed = True
        if not changed and k > 0:
            return dist
        k += 1
        reach = [[any(reach[a][c] and step[c][b] for c in range(n)) for b in range(n)] for a in range(n)]
        if k > n + 1:
            return dist


def set_pairs(X):
    return [(x, y) for x in X for y in X if x != y]


def generated_by(action, U):
    seen = set(U)
    frontier = list(U)
    while frontier:
        a = frontier.pop()
        for b in action[a]:
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    return seen


def right_reversible(t):
    n = len(t)
    for a in range(n):
        for b in range(n):
            if not (set(t[u][a] for u in range(n)) & set(t[v][b] for v in range(n))):
                return False
    return True


def is_act(action, t):
    n = len(action)
    for a in range(n):
        for s in range(len(t)):
            for u in range(len(t)):
                if action[action[a][s]][u] != action[a][t[s][u]]:
                    return False
    return True


def all_subsets(universe, max_size):
    for k in range(1, max_size + 1):
        yield from itertools.combinations(universe, k)


# ---- vectorised oracles for the larger acceptance corpora

def np_kernel(table):
    """S^1 z S^1 for z the product of all elements: the least ideal."""
    t = np.asarray(table)
    z = 0
    for a in range(t.shape[0]):
        z = t[z, a]
    left = np.unique(np.append(t[:, z], z))
    return frozenset(np.unique(np.concatenate([left, t[left, :].ravel()])).tolist())


def np_left_membership(table):
    """mem[a, x] = x in S^1 a."""
    t = np.asarray(table)
    n = t.shape[0]
    mem = np.zeros((n, n), dtype=bool)
    mem[np.arange(n)[None, :].repeat(n, 0).T, t.T] = True  # mem[a, s a] for all s
    mem[np.arange(n), np.arange(n)] = True
    return mem


def np_minimal_left_ideals(table):
    mem = np_left_membership(table)
    out = set()
    for a in range(mem.shape[0]):
        inside = np.flatnonzero(mem[a])
        if (mem[inside] >= mem[a]).all():
            out.add(frozenset(inside.tolist()))
    return out


def np_minimal_right_ideals(table):
    return np_minimal_left_ideals(np.asarray(table).T)


def np_right_reversible(table):
    """Sa meets Sb for all a, b."""
    t = np.asarray(table)
    n = t.shape[0]
    mem = np.zeros((n, n), dtype=bool)
    mem[np.arange(n)[None, :].repeat(n, 0).T, t.T] = True
    meet = mem.astype(np.int64) @ mem.T.astype(np.int64)
    return bool((meet > 0).all())


def np_congruence(action, pairs):
    """Fixpoint of R -> R u R^T u RR u {(as, bs)} on a boolean matrix."""
    act = np.asarray(action)
    n, m = act.shape
    R = np.eye(n, dtype=bool)
    for a, b in pairs:
        R[a, b] = True
    while True:
        new = R | R.T | ((R.astype(np.int64) @ R.astype(np.int64)) > 0)
        ia, ib = np.nonzero(R)
        for s in range(m):
            new[act[ia, s], act[ib, s]] = True
        if (new == R).all():
            return R
        R = new


def np_is_regular(table):
    t = np.asarray(table)
    n = t.shape[0]
    return all((t[t[a, :], a] == a).any() for a in range(n))


def np_idempotent_generated(table):
    t = np.asarray(table)
    n = t.shape[0]
    E = [e for e in range(n) if t[e, e] == e]
    seen = set(E)
    frontier = list(E)
    while frontier:
        nxt = set(t[np.ix_(frontier, E)].ravel().tolist()) - seen
        seen |= nxt
        frontier = sorted(nxt)
    return len(seen) == n


def np_zero(table):
    t = np.asarray(table)
    for z in range(t.shape[0]):
        if (t[z] == z).all() and (t[:, z] == z).all():
            return z
    return None


def np_j_trivial(table):
    """Distinct elements generate distinct two-sided principal ideals."""
    t = np.asarray(table)
    n = t.shape[0]
    seen = set()
    for a in range(n):
        left = np.unique(np.append(t[:, a], a))
        ideal = frozenset(np.unique(np.concatenate([left, t[left, :].ravel()])).tolist())
        if ideal in seen:
            return False
        seen.add(ideal)
    return True


def np_distances(action, pairs):
    """All-pairs X-distances by boolean powers of the one-step relation."""
    act = np.asarray(action)
    n, m = act.shape
    step = np.eye(n, dtype=bool)
    for x, y in pairs:
        p = np.append(act[x], x)
        q = np.append(act[y], y)
        step[p, q] = True
        step[q, p] = True
    dist = np.full((n, n), np.inf)
    reach = np.eye(n, dtype=bool)
    k = 0
    while True:
        fresh = reach & np.isinf(dist)
        dist[fresh] = k
        if k > 0 and not fresh.any():
            return dist
        reach = (reach.astype(np.int64) @ step.astype(np.int64)) > 0
        k += 1


def np_two_sided_membership(table):
    """mem[a, x] = x in S^1 a S^1."""
    t = np.asarray(table)
    n = t.shape[0]
    mem = np.zeros((n, n), dtype=bool)
    for a in range(n):
        left = np.unique(np.append(t[:, a], a))
        mem[a, left] = True
        mem[a, t[left, :].ravel()] = True
    return mem
