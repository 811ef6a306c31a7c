"""Executable checks of the minimal-ideal theorems on finite instances.

Each check rebuilds the objects named in a proof (generating sets, ideals,
maps), measures the relevant X-diameters with :mod:`pseudofin.metric`, and
compares them with the bound the proof gives. Nothing is assumed: a bound is
only reported as met after the breadth-first search has measured it.

Statements that are vacuous for finite carriers are not checked here: every
finite monoid is weakly right reversible (any infinite list of principal left
ideals repeats one), and the statements about infinitely many classes have no
finite counterexample to look for.
"""
from __future__ import annotations

import hashlib
import itertools
import math
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .acts import (
    FiniteRightAct,
    act_of_right_ideal,
    act_of_semigroup,
    diagonal_act,
    generates,
    min_generating_set,
    r_class_mod_h_act,
)
from .constructions import (
    Built,
    ExtensionSpec,
    check_spec,
    e_of,
    e_of_spec,
    extension,
    generator_condition,
    make_spec,
)
from .core import FiniteSemigroup, adjoin_identity, idempotent_power, random_transformation_monoid, subsemigroup
from .errors import CapExceeded, ConditionError, NotAMonoid, NotOrthodox, RangeError
from .metric import (
    GenSet,
    distance_matrix,
    is_absorbing,
    absorbing_sets,
    is_generating,
    min_diameter,
    right_diameter_report,
    sequences_from,
)
from .structure import (
    band_decomposition,
    green,
    has_zero,
    ideals,
    is_left_compatible,
    kernel,
    left_zero_times_group_iso,
    minimal_one_sided_ideals,
    predicates,
)

# The diagonal act has |S|^2 points and |S|^3 action entries.
DIAG_ORDER_LIMIT = 60

SUITES = ("kernel", "csmi", "rr", "jtrivial", "minideal", "con1", "diag", "orthodox")


@dataclass
class WitnessReport:
    theorem_id: str
    instance: str
    bound: Optional[int]
    measured: object
    passed: bool
    witnesses: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)
    applicable: bool = True

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "applicable": self.applicable,
            "bound": _json_num(self.bound),
            "measured": _json_num(self.measured),
            "pass": self.passed,
            "trace": list(self.trace),
        }


def _json_num(x):
    if isinstance(x, float) and math.isinf(x):
        return None
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, tuple):
        return [_json_num(v) for v in x]
    return x


def not_applicable(theorem_id: str, instance: str, reason: str) -> WitnessReport:
    return WitnessReport(theorem_id, instance, None, None, True, {}, [f"not applicable: {reason}"], False)


def _require_monoid(S: FiniteSemigroup, what: str) -> None:
    if not S.is_monoid:
        raise NotAMonoid(f"{what} needs a monoid")


def _fmt(S: FiniteSemigroup, elems) -> str:
    return "{" + ", ".join(S.label(int(x)) for x in elems) + "}"


def _r_class(S, a):
    g = green(S)
    return np.flatnonzero(g.R == g.R[a]).tolist()


def _l_class(S, a):
    g = green(S)
    return np.flatnonzero(g.L == g.L[a]).tolist()


def _h_class(S, a):
    g = green(S)
    return np.flatnonzero(g.H == g.H[a]).tolist()


def _sub_act(S: FiniteSemigroup, elements) -> tuple[FiniteRightAct, dict]:
    """A right ideal as an act, with a map from S-indices to carrier points."""
    A = act_of_right_ideal(S, elements)
    return A, {int(x): i for i, x in enumerate(A.elements)}


# ---------------------------------------------------------------- kernel


def check_kernel(S: FiniteSemigroup, instance: str = "") -> WitnessReport:
    """The kernel exists, is completely simple, and is the union of the minimal left
    ideals and of the minimal right ideals; its Rees coordinates rebuild it."""
    kd = kernel(S)
    K = set(kd.kernel_elements)
    union_l = set().union(*map(set, kd.minimal_left_ideals))
    union_r = set().union(*map(set, kd.minimal_right_ideals))
    trace = [f"kernel of size {len(K)}"]
    ok = kd.is_completely_simple and union_l == K and union_r == K
    if kd.rees is not None:
        rees = kd.rees
        built = rees.rebuild()
        iso = rees.iso
        nt, nJ = rees.group_table.order, rees.J_size
        Kl = sorted(K)
        index = np.array([(iso[x][0] * nt + iso[x][1]) * nJ + iso[x][2] for x in Kl])
        rebuilt = built.semigroup.table[np.ix_(index, index)]
        mapped = np.array([(iso[int(y)][0] * nt + iso[int(y)][1]) * nJ + iso[int(y)][2]
                           for y in S.table[np.ix_(Kl, Kl)].ravel()]).reshape(len(Kl), len(Kl))
        rebuild_ok = bool(np.array_equal(rebuilt, mapped))
        ok = ok and rebuild_ok and rees.is_normal()
        trace.append(f"Rees data I={rees.I_size} J={rees.J_size} |G|={nt}; rebuild {'matches' if rebuild_ok else 'differs'}")
    trace.append(f"{len(kd.minimal_left_ideals)} minimal left ideals, {len(kd.minimal_right_ideals)} minimal right ideals")
    return WitnessReport("kernel", instance, None, len(K), bool(ok), {"kernel": sorted(K)}, trace)


# ---------------------------------------------------------------- completely simple minimal ideals


def default_generating_set(S: FiniteSemigroup) -> list:
    """{1} u R_e for the least kernel idempotent e: every a is a = 1a, ea = (ea)1."""
    e = kernel(S).rees.idempotent
    return sorted({S.identity, *_r_class(S, e)})


def check_csmi_2a(S: FiniteSemigroup, X=None, instance: str = "") -> WitnessReport:
    """(1) => (2a): D(Y, K0^1) <= 2n + 3 with n = D(X, S)."""
    _require_monoid(S, "check_csmi_2a")
    t = S.table
    kd = kernel(S)
    e = kd.rees.idempotent
    trace = []
    X = default_generating_set(S) if X is None else sorted(set(int(x) for x in X))
    if not is_generating(act_of_semigroup(S), X):
        raise ConditionError("X", f"{_fmt(S, X)} does not generate the universal right congruence")
    added = e not in X
    if added:
        X = sorted(X + [e])
        trace.append(f"added kernel idempotent {S.label(e)} to X")
    n = right_diameter_report(S, X).diameter
    V = sorted({int(t[e, x]) for x in X})
    K0 = sorted(set().union(*(_l_class(S, v) for v in V)))
    R_e = set(_r_class(S, e))
    E_K0_Re = [f for f in K0 if t[f, f] == f and f in R_e]
    sub, elems = subsemigroup(S, K0)
    T = adjoin_identity(sub)
    one_T = T.identity
    pos = {int(x): i for i, x in enumerate(elems)}
    Y_S = sorted(set(V) | set(E_K0_Re))  # the "1" of Y is the identity of K0^1
    Y_T = [one_T] + [pos[y] for y in Y_S]
    report = right_diameter_report(T, Y_T)
    measured = report.diameter
    bound = 2 * n + 3
    trace += [
        f"X = {_fmt(S, X)}, n = D(X, S) = {n}",
        f"V = eX = {_fmt(S, V)}",
        f"K0 = union of L_v = {_fmt(S, K0)}",
        f"Y = {{1}} u {_fmt(S, Y_S)}",
        f"D(Y, K0^1) = {measured} <= {bound}",
    ]
    witnesses = {"e": e, "X": X, "n": n, "V": V, "K0": K0, "Y": Y_S, "e_added": added, "report": report}
    return WitnessReport("thm5.1(1=>2a)", instance, bound, measured, measured <= bound, witnesses, trace)


def _group_and_V(S: FiniteSemigroup, K0, e):
    t = S.table
    E = [f for f in K0 if t[f, f] == f]
    R_e, L_e = set(_r_class(S, e)), set(_l_class(S, e))
    V = sorted({int(t[f, g]) for f in E if f in R_e for g in E if g in L_e})
    G = _h_class(S, e)
    return G, V


def _k0_idempotent(S: FiniteSemigroup, K0) -> int:
    e = kernel(S).rees.idempotent
    if e in K0:
        return e
    return next(f for f in K0 if S.table[f, f] == f)


def check_csmi_2to3(S: FiniteSemigroup, K0, Y, instance: str = "") -> WitnessReport:
    """(2) => (3a): D(F u V, G) <= 3n with n = D(Y, K0^1).

    Y holds S-indices of K0, with None for the identity adjoined in K0^1.
    """
    _require_monoid(S, "check_csmi_2to3")
    t = S.table
    K0 = sorted(set(int(k) for k in K0))
    sub, elems = subsemigroup(S, K0)
    T = adjoin_identity(sub)
    pos = {int(x): i for i, x in enumerate(elems)}
    Y = list(dict.fromkeys(None if y is None else int(y) for y in Y))
    Y_T = [T.identity if y is None else pos[y] for y in Y]
    if not is_generating(act_of_semigroup(T), Y_T):
        raise ConditionError("2a", "Y does not generate the universal right congruence of K0^1")
    n = right_diameter_report(T, Y_T).diameter
    e = _k0_idempotent(S, K0)
    G, V = _group_and_V(S, K0, e)
    F = sorted({e} | {e if y is None else int(t[t[e, y], e]) for y in Y})
    Gsub, gelems = subsemigroup(S, G)
    gpos = {int(x): i for i, x in enumerate(gelems)}
    FV = sorted(set(F) | set(V))
    if not set(FV) <= set(G):
        raise AssertionError("F u V leaves the group H_e")
    report = right_diameter_report(Gsub, [gpos[x] for x in FV])
    measured = report.diameter
    bound = 3 * n
    trace = [
        f"n = D(Y, K0^1) = {n}",
        f"e = {S.label(e)}, G = H_e = {_fmt(S, G)}",
        f"F = {{e, eye}} = {_fmt(S, F)}, V = {_fmt(S, V)}",
        f"D(F u V, G) = {measured} <= {bound}",
    ]
    witnesses = {"e": e, "G": G, "F": F, "V": V, "n": n, "K0": K0, "report": report}
    return WitnessReport("thm5.1(2=>3a)", instance, bound, measured, measured <= bound, witnesses, trace)


def check_csmi_3to1(S: FiniteSemigroup, K0=None, F=None, instance: str = "") -> WitnessReport:
    """(3) => (1): D(Z, R) <= 2n(m + 1) + m.

    Without K0 and F the sets produced by the (1) => (2) => (3) checks are used.
    """
    _require_monoid(S, "check_csmi_3to1")
    t = S.table
    trace = []
    if K0 is None or F is None:
        r2a = check_csmi_2a(S)
        r23 = check_csmi_2to3(S, r2a.witnesses["K0"], r2a.witnesses["Y"] + [None])
        K0, F = r23.witnesses["K0"], r23.witnesses["F"]
        trace.append("K0 and F taken from the (1)=>(2)=>(3) constructions")
    K0 = sorted(set(int(k) for k in K0))
    e = _k0_idempotent(S, K0)
    G, V = _group_and_V(S, K0, e)
    F = sorted(set(int(f) for f in F))
    Gsub, gelems = subsemigroup(S, G)
    gpos = {int(x): i for i, x in enumerate(gelems)}
    n = right_diameter_report(Gsub, [gpos[x] for x in sorted(set(F) | set(V))]).diameter
    R = _r_class(S, e)
    A = r_class_mod_h_act(S, R)
    best = min_diameter(A, min(2, A.carrier_size))
    if best.genset is None:
        Yh = list(range(A.carrier_size))
        trace.append("no generating set of size <= 2 for R/H; using all of R/H")
    else:
        Yh = list(best.genset.members)
    m = distance_matrix(A, Yh).diameter
    X = sorted(min(A.elements[y]) for y in Yh)
    E_R = [f for f in K0 if t[f, f] == f and f in set(R)]
    Z = sorted(set(F) | set(E_R) | set(X))
    Ract, rpos = _sub_act(S, R)
    report = distance_matrix(Ract, [rpos[z] for z in Z])
    measured = report.diameter
    bound = 2 * n * (m + 1) + m
    trace += [
        f"e = {S.label(e)}, R = R_e = {_fmt(S, R)}, G = {_fmt(S, G)}",
        f"n = D(F u V, G) = {n}, m = D(Y, R/H) = {m} over {A.carrier_size} H-classes",
        f"Z = F u (E(K0) n R) u X = {_fmt(S, Z)}",
        f"D(Z, R) = {measured} <= {bound}",
    ]
    witnesses = {"e": e, "R": R, "Z": Z, "n": n, "m": m, "report": report}
    return WitnessReport("thm5.1(3=>1)", instance, bound, measured, measured <= bound, witnesses, trace)


def check_csmi(S: FiniteSemigroup, instance: str = "") -> list:
    r2a = check_csmi_2a(S, instance=instance)
    r23 = check_csmi_2to3(S, r2a.witnesses["K0"], r2a.witnesses["Y"] + [None], instance=instance)
    r31 = check_csmi_3to1(S, r23.witnesses["K0"], r23.witnesses["F"], instance=instance)
    return [r2a, r23, r31]


# ---------------------------------------------------------------- right reversibility


def _right_reversible_bitmask(S: FiniteSemigroup) -> bool:
    masks = []
    for a in range(S.order):
        bits = 0
        for x in set(S.table[:, a].tolist()):
            bits |= 1 << x
        masks.append(bits)
    return all(ma & mb for ma, mb in itertools.combinations(masks, 2))


def check_rr_equivalence(S: FiniteSemigroup, instance: str = "") -> WitnessReport:
    """Finite forms of the four conditions; a finite monoid is right pseudo-finite,
    so each reduces to a statement about reversibility or the kernel."""
    _require_monoid(S, "check_rr_equivalence")
    kd = kernel(S)
    e = kd.rees.idempotent
    c1 = predicates(S).right_reversible
    R_e = _r_class(S, e)
    absorbed = is_absorbing(S, R_e)
    if S.order <= 8:
        absorbed = absorbed and absorbing_sets(S, S.order) is not None
    c2 = absorbed and _right_reversible_bitmask(S)
    iso = left_zero_times_group_iso(S)
    c3 = kd.is_completely_simple and iso is not None
    c4 = len(kd.minimal_left_ideals) == 1
    conds = (bool(c1), bool(c2), bool(c3), bool(c4))
    trace = [
        f"(1) right reversible: {c1}",
        f"(2) finitely absorbed (R_e absorbing: {absorbed}) and right reversible: {c2}",
        f"(3) kernel is left zero x group: {c3}" + (f" (|L| = {kd.rees.I_size}, |G| = {kd.rees.group_table.order})" if c3 else ""),
        f"(4) single minimal left ideal: {c4} ({len(kd.minimal_left_ideals)} found)",
    ]
    return WitnessReport("thm5.20", instance, None, conds, len(set(conds)) == 1, {"iso": iso}, trace)


# ---------------------------------------------------------------- J-trivial monoids


def check_jtrivial_zero(S: FiniteSemigroup, X=None, instance: str = "") -> WitnessReport:
    """A J-trivial finite monoid has a zero, recovered by the local-zero chaining."""
    _require_monoid(S, "check_jtrivial_zero")
    if not predicates(S).J_trivial:
        return not_applicable("thm5.12", instance, "not J-trivial")
    t = S.table
    one = S.identity
    g = green(S)
    zero = has_zero(S)
    if X is None:
        X = sorted({one, *S.idempotents().tolist()})
    A = act_of_semigroup(S)
    if not is_generating(A, X):
        raise ConditionError("X", "X does not generate the universal right congruence")

    def star(u):
        return idempotent_power(S, u)[2]

    seqs = sequences_from(A, X, one)
    V = set()
    trace = []
    ok = zero is not None
    for a in range(S.order):
        steps = seqs[a]
        if not steps:
            chain = star(one)
        else:
            x1, _, s1 = steps[0]
            if x1 != one or s1 not in (None, one):
                ok = False
                trace.append(f"first step for {S.label(a)} does not start 1 = 1*1")
            chain = star(steps[0][1])
            for _, y, _ in steps[1:]:
                chain = star(int(t[star(y), chain]))
        if not g.leq_J[chain, a]:
            ok = False
            trace.append(f"e_k = {S.label(chain)} is not J-below {S.label(a)}")
        V.add(chain)
    z = S.product(sorted(V))
    below_all = bool(g.leq_J[z, :].all())
    ok = ok and below_all and z == zero
    trace.insert(0, f"V = {_fmt(S, sorted(V))}, z = {S.label(z)}, zero = {S.label(zero) if zero is not None else None}")
    return WitnessReport("thm5.12", instance, None, z, bool(ok), {"V": sorted(V), "z": z, "zero": zero}, trace)


# ---------------------------------------------------------------- condition (3) for minimal ideals


def _condition3_violation(S: FiniteSemigroup, leq: np.ndarray, k: int):
    """First (a, u, v) with u <= v but auk not <= avk."""
    t = S.table
    uk = t[:, k]
    for a in range(S.order):
        auk = t[a, uk]
        bad = np.argwhere(leq & ~leq[np.ix_(auk, auk)])
        if bad.size:
            return (a, int(bad[0][0]), int(bad[0][1]))
    return None


def check_min_ideal_conditions(S: FiniteSemigroup, instance: str = "") -> WitnessReport:
    _require_monoid(S, "check_min_ideal_conditions")
    g = green(S)
    kd = kernel(S)
    k_L = kd.minimal_left_ideals[0][0]
    k_J = kd.kernel_elements[0]
    bad_L = _condition3_violation(S, g.leq_L, k_L)
    bad_J = _condition3_violation(S, g.leq_J, k_J)
    trace = [
        f"L condition (3) with k = {S.label(k_L)}: {'holds' if bad_L is None else f'fails at {bad_L}'}",
        f"J condition (3) with k = {S.label(k_J)}: {'holds' if bad_J is None else f'fails at {bad_J}'}",
    ]
    ok = bad_L is None and bad_J is None
    compatible, _ = is_left_compatible(S, "L")
    if compatible:
        union = sorted(set().union(*map(set, kd.minimal_left_ideals)))
        cor = union == kd.kernel_elements
        ok = ok and cor
        trace.append(f"<=_L left compatible; kernel = union of {len(kd.minimal_left_ideals)} minimal left ideals: {cor}")
    return WitnessReport("thm6.1/6.3", instance, None, (bad_L is None, bad_J is None), ok,
                         {"k_L": k_L, "k_J": k_J}, trace)


# ---------------------------------------------------------------- extension bound


@dataclass(frozen=True)
class Con1Instance:
    name: str
    spec: ExtensionSpec
    X: tuple  # T-indices
    J0: tuple
    j0: int
    i0: int = 0


def _j_act(spec: ExtensionSpec) -> FiniteRightAct:
    if spec.S is None:
        # the empty semigroup: only the identity of S^1 acts
        from .fixtures import trivial

        return FiniteRightAct(trivial(), np.arange(spec.J_size)[:, None])
    return FiniteRightAct(spec.S, spec.right_action)


def check_con1_bound(inst: Con1Instance, instance: str = "") -> WitnessReport:
    spec = inst.spec
    check_spec(spec)
    T = spec.T
    tt = T.table
    X = sorted(set(int(x) for x in inst.X))
    J0 = sorted(set(int(j) for j in inst.J0))
    everything = list(range(T.order))
    if not X or ideals(T, "left", X) != everything:
        raise ConditionError(1, "T != T^1 X")
    if sorted(set(spec.P[J0, :].ravel().tolist())) != everything:
        raise ConditionError(2, "the rows J0 of P do not cover T")
    if inst.j0 not in J0 or not set(spec.P[inst.j0].tolist()) <= set(X):
        raise ConditionError(3, f"row j0 = {inst.j0} of P is not inside X")
    trace = []
    Jact = _j_act(spec)
    if not is_generating(Jact, J0):
        for j in range(spec.J_size):
            if j not in J0:
                J0 = sorted(J0 + [j])
                if is_generating(Jact, J0):
                    break
        trace.append(f"J0 enlarged to {J0} so that it generates the universal congruence on J")
    d = distance_matrix(Jact, J0).diameter
    built = extension(spec)
    M = built.semigroup
    ns, nt, nJ = spec.s_order, T.order, spec.J_size
    base = ns + 1

    def midx(i, u, j):
        return base + (i * nt + u) * nJ + j

    XT1 = sorted(set(X) | set(tt[X, :].ravel().tolist()))
    K = [midx(inst.i0, u, j) for u in XT1 for j in range(nJ)]
    Kact, kpos = _sub_act(M, K)
    X2 = set(tt[np.ix_(X, X)].ravel().tolist())
    X3 = set(tt[np.ix_(sorted(X2), X)].ravel().tolist())
    U = sorted(set(X) | X2 | X3)
    H = [kpos[midx(inst.i0, u, j)] for u in U for j in J0]
    report = distance_matrix(Kact, H)
    measured = report.diameter
    bound = d + 2
    trace += [
        f"d = D(J0, J) = {d} with J0 = {J0}",
        f"K = {{i0}} x XT^1 x J has {len(K)} elements, |U| = {len(U)}, |H| = {len(H)}",
        f"D(H, K) = {measured} <= {bound}",
    ]
    return WitnessReport("thm7.3", instance or inst.name, bound, measured, measured <= bound,
                         {"d": d, "J0": J0, "U": U, "report": report}, trace)


def induced_con1_instance(S: FiniteSemigroup, x: int, Y=None, name: str = "") -> Con1Instance:
    """The data used to show E(S, x) is right pseudo-finite.

    T = {x} u S^2, X = {x} u Y^2 u Y^3, J0 = {i_y : y in Y} u {0}, j0 = 0.
    (J0 must index Y rather than X: an entry t = ys of P sits in row i_y.)
    """
    n = S.order
    Y = list(range(n)) if Y is None else sorted(set(int(y) for y in Y))
    base = e_of_spec(S, x, Y)
    st = S.table
    T_elems = sorted({int(x)} | set(st.ravel().tolist()))
    T, elems = subsemigroup(S, T_elems)
    tpos = {int(v): i for i, v in enumerate(elems)}
    P = np.vectorize(lambda v: tpos[int(v)])(base.P)
    spec = make_spec(S, T, base.I_size, base.J_size, P, base.left_action, base.right_action)
    Y2 = set(st[np.ix_(Y, Y)].ravel().tolist())
    Y3 = set(st[np.ix_(sorted(Y2), Y)].ravel().tolist())
    X = sorted(tpos[v] for v in {int(x)} | Y2 | Y3)
    J0 = tuple(sorted(set(Y) | {n}))
    return Con1Instance(name or f"E({n}-element S, x={S.label(x)})", spec, tuple(X), J0, n)


def remark_con1_instance(T: FiniteSemigroup, name: str = "") -> Con1Instance:
    """E(empty, T; I, {1, 2}; P) with row 1 constant at 1_T and row 2 listing T."""
    nt = T.order
    one = T.identity
    P = np.vstack([np.full(nt, one), np.arange(nt)])
    spec = make_spec(None, T, nt, 2, P)
    return Con1Instance(name or f"M[T;{nt},2;P]^1", spec, (one,), (0, 1), 0)


def degenerate_con1_instance() -> Con1Instance:
    from .fixtures import trivial

    T = trivial()
    return Con1Instance("E(empty, trivial; 1, 1)", make_spec(None, T, 1, 1, [[0]]), (0,), (0,), 0)


def con1_instances() -> list:
    from . import fixtures as fx

    out = [degenerate_con1_instance()]
    for name, T in [("trivial", fx.trivial()), ("Z2", fx.z2()), ("Z3", fx.cyclic_group(3)), ("O2", fx.o2()),
                    ("N3", fx.n3()), ("T2", fx.t2()), ("chain3", fx.semilattice_chain(3)),
                    ("RZ2^1", fx.rz2_1()), ("LZ2^1", fx.lz2_1())]:
        out.append(remark_con1_instance(T, f"M[{name};I,2;P]^1"))
    for name, S, x, Y in [
        ("trivial", fx.trivial(), 0, None),
        ("Z2", fx.z2(), 0, None),
        ("Z2", fx.z2(), 1, None),
        ("Z2", fx.z2(), 1, [1]),
        ("N3", fx.n3(), 0, [0]),
        ("N3", fx.n3(), 1, None),
        ("N3", fx.n3(), 2, None),
        ("RZ2^1", fx.rz2_1(), 2, [2]),
        ("RZ2^1", fx.rz2_1(), 0, None),
        ("LZ2^1", fx.lz2_1(), 1, None),
        ("O2", fx.o2(), 1, None),
        ("RZ2", fx.rz2(), 0, None),
    ]:
        ylab = "S" if Y is None else _fmt(S, Y)
        out.append(induced_con1_instance(S, x, Y, f"E({name}, x={S.label(x)}, Y={ylab})"))
    return out


# ---------------------------------------------------------------- extensions


def extension_specs() -> list:
    """Named extension specs used for the kernel-coordinate and power identities."""
    from . import fixtures as fx

    specs = [(inst.name, inst.spec) for inst in con1_instances()]
    for name, S in [("trivial", fx.trivial()), ("Z2", fx.z2()), ("N3", fx.n3()), ("RZ2^1", fx.rz2_1()), ("O2", fx.o2())]:
        specs.append((f"E({name})", e_of_spec(S, S.identity)))
    return specs


def check_extension_kernel(spec: ExtensionSpec, instance: str = "", built: Optional[Built] = None) -> WitnessReport:
    """The kernel of E(S, T; I, J; P) is I x ker(T) x J, by coordinates."""
    built = built or extension(spec)
    M = built.semigroup
    kT = set(kernel(spec.T).kernel_elements)
    expected = sorted(
        i for i, c in enumerate(built.coords) if c[0] == "m" and c[2] in kT
    )
    got = kernel(M).kernel_elements
    ok = got == expected and len(got) == spec.I_size * len(kT) * spec.J_size
    trace = [f"|ker M| = {len(got)}, |I| |ker T| |J| = {spec.I_size * len(kT) * spec.J_size}"]
    return WitnessReport("prop8.2", instance, len(expected), len(got), ok, {}, trace)


def check_power_identity(spec: ExtensionSpec, instance: str = "", built: Optional[Built] = None) -> WitnessReport:
    """(i, t, j)^(q+1+r) = (i, t, j)^(q+1) with (q, r) the index and period of t p[j, i]."""
    built = built or extension(spec)
    M = built.semigroup
    T = spec.T
    tt = T.table
    checked = 0
    bad = None
    for idx, c in enumerate(built.coords):
        if c[0] != "m":
            continue
        _, i, u, j = c
        q, r, _ = idempotent_power(T, int(tt[u, spec.P[j, i]]))
        powers = [idx]
        for _ in range(q + r):
            powers.append(M.mul(powers[-1], idx))
        # powers[k] is m^(k+1)
        if powers[q + r] != powers[q]:
            bad = c
            break
        # also the closed form (i, (t p)^(k-1) t, j)
        k_coord = built.coords[powers[q]]
        tp = int(tt[u, spec.P[j, i]])
        acc = u
        for _ in range(q):
            acc = int(tt[tp, acc])
        if k_coord != ("m", i, acc, j):
            bad = c
            break
        checked += 1
    trace = [f"{checked} matrix elements checked" + ("" if bad is None else f"; fails at {bad}")]
    return WitnessReport("prop8.5", instance, None, checked, bad is None, {}, trace)


def check_e_regular(S: FiniteSemigroup, instance: str = "") -> WitnessReport:
    """E(S) is regular / idempotent-generated exactly when S is."""
    from .structure import idempotent_generated

    _require_monoid(S, "check_e_regular")
    M = e_of(S, S.identity).semigroup
    pS, pM = predicates(S), predicates(M)
    igS, igM = idempotent_generated(S), idempotent_generated(M)
    ok = pS.regular == pM.regular and igS == igM
    trace = [f"regular: S {pS.regular}, E(S) {pM.regular}", f"idempotent-generated: S {igS}, E(S) {igM}"]
    return WitnessReport("prop8.3", instance, None, (pM.regular, igM), ok, {}, trace)


# ---------------------------------------------------------------- diagonal act


def check_diagonal_prop(S: FiniteSemigroup, instance: str = "") -> WitnessReport:
    """Generating sets of the diagonal act and right diameter 1, both ways.

    The converse adds the pairs (x, x): a pair (a, a) is joined to nothing by
    a length-one sequence, so symmetrising X alone need not cover it.
    """
    n = S.order
    if n < 2:
        raise RangeError("the diagonal act statement is for non-trivial semigroups")
    D = diagonal_act(S)
    U = [D.elements[p] for p in min_generating_set(D).members]
    forward = right_diameter_report(S, GenSet.pairs(U))
    fwd_ok = forward.diameter == 1
    trace = [f"|U| = {len(U)}, right U-diameter = {forward.diameter}"]

    def converse(pairs) -> bool:
        sym = {(x, y) for x, y in pairs} | {(y, x) for x, y in pairs}
        support = {z for p in pairs for z in p}
        sym |= {(z, z) for z in support}
        return generates(D, [a * n + b for a, b in sym])

    candidates = [("U", U), ("S x S", [(a, b) for a in range(n) for b in range(n) if a < b])]
    conv_ok = True
    for label, pairs in candidates:
        rep = right_diameter_report(S, GenSet.pairs(pairs))
        if rep.diameter == 1:
            good = converse(pairs)
            conv_ok = conv_ok and good
            trace.append(f"converse from {label}: US^1 = S x S is {good}")
    return WitnessReport("prop3.6", instance, 1, forward.diameter, bool(fwd_ok and conv_ok), {"U": U}, trace)


# ---------------------------------------------------------------- orthodox monoids


def check_orthodox_structure(S: FiniteSemigroup, instance: str = "") -> WitnessReport:
    if not predicates(S).orthodox:
        raise NotOrthodox("the semigroup is not orthodox")
    t = S.table
    kd = kernel(S)
    trace = []
    ok = kd.is_completely_simple
    E = S.idempotents().tolist()
    B, belems = subsemigroup(S, E)
    bd = band_decomposition(B)
    yt = bd.semilattice.table
    bottom = next(z for z in range(bd.semilattice.order) if (yt[z] == z).all())
    B0 = sorted(int(belems[b]) for b in bd.blocks[bottom])
    e = B0[0]
    L_e, R_e = _l_class(S, e), _r_class(S, e)
    ok = ok and L_e in kd.minimal_left_ideals and R_e in kd.minimal_right_ideals
    trace.append(f"e = {S.label(e)} in the least rectangular band {_fmt(S, B0)}; L_e, R_e minimal: {ok}")
    H_e = _h_class(S, e)
    phi = t[t[e, :], e]  # a -> eae
    image_ok = sorted(set(phi.tolist())) == H_e
    hom_ok = bool((phi[t] == t[phi[:, None], phi[None, :]]).all())
    ok = ok and image_ok and hom_ok
    trace.append(f"phi_e onto H_e: {image_ok}; homomorphism: {hom_ok}")
    A = r_class_mod_h_act(S, R_e)
    trace.append(f"R/H act on {A.carrier_size} points")
    return WitnessReport("thm5.9", instance, None, len(H_e), bool(ok), {"e": e}, trace)


# ---------------------------------------------------------------- suite


def instance_hash(S: FiniteSemigroup) -> str:
    h = hashlib.sha256()
    h.update(np.ascontiguousarray(S.table, dtype=np.int64).tobytes())
    h.update(str(S.identity).encode())
    return h.hexdigest()[:16]


@dataclass
class Instance:
    name: str
    semigroup: FiniteSemigroup
    seed: Optional[int] = None
    notes: tuple = ()


def fixture_corpus() -> list:
    from .fixtures import named_fixtures

    return [Instance(name, S) for name, S in named_fixtures().items()]


def random_corpus(count: int, seed: int = 0, degree: Optional[int] = None, cap: int = 500) -> list:
    """Seeds seed..seed+count-1; degree 1 + s % 5 unless fixed, 1 + (s // 5) % 3 generators."""
    out = []
    for s in range(seed, seed + count):
        deg = degree if degree is not None else 1 + s % 5
        gens = 1 + (s // 5) % 3
        S = random_transformation_monoid(deg, gens, s, cap=cap)
        out.append(Instance(f"random(seed={s}, degree={deg}, gens={gens})", S, s))
    return out


def lift(inst: Instance) -> Instance:
    if inst.semigroup.is_monoid:
        return inst
    return Instance(inst.name + "^1", adjoin_identity(inst.semigroup), inst.seed,
                    inst.notes + ("identity adjoined: the checks are stated for monoids",))


def _checks_for(suite: str, inst: Instance) -> list:
    S, name = inst.semigroup, inst.name
    if suite == "kernel":
        return [check_kernel(S, name)]
    if suite == "csmi":
        return check_csmi(S, name)
    if suite == "rr":
        return [check_rr_equivalence(S, name)]
    if suite == "jtrivial":
        return [check_jtrivial_zero(S, instance=name)]
    if suite == "minideal":
        return [check_min_ideal_conditions(S, name)]
    if suite == "diag":
        if S.order < 2:
            return [not_applicable("prop3.6", name, "trivial semigroup")]
        if S.order > DIAG_ORDER_LIMIT:
            return [not_applicable("prop3.6", name, f"order above {DIAG_ORDER_LIMIT}")]
        return [check_diagonal_prop(S, name)]
    if suite == "orthodox":
        if not predicates(S).orthodox:
            return [not_applicable("thm5.9", name, "not orthodox")]
        return [check_orthodox_structure(S, name)]
    if suite == "con1":
        if S.order > 6:
            return [not_applicable("thm7.3", name, "order above 6")]
        return [check_con1_bound(induced_con1_instance(S, S.identity), name)]
    raise RangeError(f"unknown suite {suite!r}")


@dataclass
class SuiteEntry:
    report: WitnessReport
    instance_hash: str
    seed: Optional[int]
    notes: tuple = ()
    dump: Optional[str] = None

    def to_json(self) -> dict:
        out = {
            "theorem_id": self.report.theorem_id,
            "instance": self.report.instance,
            "instance_hash": self.instance_hash,
            "bound": _json_num(self.report.bound),
            "measured": _json_num(self.report.measured),
            "pass": self.report.passed,
            "applicable": self.report.applicable,
            "seed": self.seed,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if self.dump:
            out["dump"] = self.dump
        return out


@dataclass
class SuiteReport:
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.report.passed for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if not e.report.passed]

    def to_json(self) -> dict:
        return {
            "checks": len(self.entries),
            "applicable": sum(e.report.applicable for e in self.entries),
            "failures": len(self.failures()),
            "pass": self.passed,
            "entries": [e.to_json() for e in self.entries],
        }


def run_suite(suites: Iterable[str], corpus: list, dump_dir: Optional[str] = None,
              include_constructions: bool = True) -> SuiteReport:
    """Run the selected checks over the corpus; a failing instance's table is dumped."""
    suites = list(suites)
    entries = []
    for suite in suites:
        for raw in corpus:
            inst = lift(raw)
            for rep in _checks_for(suite, inst):
                entries.append(_entry(rep, inst, dump_dir))
        if suite == "con1" and include_constructions:
            for ci in con1_instances():
                M = extension(ci.spec).semigroup
                entries.append(_entry(check_con1_bound(ci), Instance(ci.name, M), dump_dir))
    return SuiteReport(entries)


def _entry(rep: WitnessReport, inst: Instance, dump_dir: Optional[str]) -> SuiteEntry:
    h = instance_hash(inst.semigroup)
    dump = None
    if not rep.passed and dump_dir is not None:
        from .io import dumps, semigroup_to_json

        os.makedirs(dump_dir, exist_ok=True)
        dump = os.path.join(dump_dir, f"{rep.theorem_id.replace('/', '_')}-{h}.json")
        with open(dump, "w", encoding="utf-8") as fh:
            fh.write(dumps(semigroup_to_json(inst.semigroup)))
    return SuiteEntry(rep, h, inst.seed, inst.notes, dump)
