"""Small named semigroups used throughout the tests and the verify suite."""
from __future__ import annotations

from .constructions import extension_by_constants, rees_matrix, with_identity
from .core import FiniteSemigroup, Transformation, adjoin_identity, closure_from_transformations, validate


def trivial() -> FiniteSemigroup:
    return validate([[0]], labels=["e"])


def o2() -> FiniteSemigroup:
    """The two-element chain {1, 0}."""
    return validate([[0, 1], [1, 1]], labels=["1", "0"])


def n3() -> FiniteSemigroup:
    """The monoid {1, a, 0} with a^2 = 0."""
    return validate([[0, 1, 2], [1, 2, 2], [2, 2, 2]], labels=["1", "a", "0"])


def z2() -> FiniteSemigroup:
    return validate([[0, 1], [1, 0]], labels=["1", "g"])


def cyclic_group(n: int) -> FiniteSemigroup:
    return validate([[(a + b) % n for b in range(n)] for a in range(n)], labels=[f"g{a}" for a in range(n)])


def rz2() -> FiniteSemigroup:
    return validate([[0, 1], [0, 1]], labels=["r1", "r2"])


def lz2() -> FiniteSemigroup:
    return validate([[0, 0], [1, 1]], labels=["l1", "l2"])


def rz2_1() -> FiniteSemigroup:
    return adjoin_identity(rz2())


def lz2_1() -> FiniteSemigroup:
    return adjoin_identity(lz2())


def t2() -> FiniteSemigroup:
    """Full transformation monoid on two points, ordered id, swap, c0, c1."""
    S, _ = closure_from_transformations([(0, 1), (1, 0), (0, 0)])
    return FiniteSemigroup(S.table, S.identity, ["id", "s", "c0", "c1"])


def full_transformation_monoid(degree: int) -> FiniteSemigroup:
    gens = [Transformation.identity(degree)]
    if degree > 1:
        gens.append(Transformation(tuple(range(1, degree)) + (0,)))
        gens.append(Transformation((1, 0) + tuple(range(2, degree))))
        gens.append(Transformation((0,) + tuple(range(1, degree - 1)) + (0,)) if degree > 2 else Transformation((0, 0)))
    S, _ = closure_from_transformations(gens)
    return S


def semilattice_chain(n: int) -> FiniteSemigroup:
    return validate([[max(a, b) for b in range(n)] for a in range(n)], labels=[str(a) for a in range(n)])


def rees_z2_sandwich():
    """M[Z2; 2, 2; P] with P normal and p22 = g."""
    return rees_matrix(z2(), 2, 2, [[0, 0], [0, 1]])


def named_fixtures() -> dict:
    """The monoid fixtures used by the verify suite, by name."""
    return {
        "trivial": trivial(),
        "O2": o2(),
        "N3": n3(),
        "Z2": z2(),
        "Z3": cyclic_group(3),
        "T2": t2(),
        "T3": full_transformation_monoid(3),
        "RZ2^1": rz2_1(),
        "LZ2^1": lz2_1(),
        "M[Z2;2,2;P]^1": with_identity(rees_z2_sandwich()).semigroup,
        "C(Z2)^1": with_identity(extension_by_constants(z2())).semigroup,
        "chain3": semilattice_chain(3),
    }
