import numpy as np
import pytest
from hypothesis import assume, strategies as st

from pseudofin import fixtures
from pseudofin.core import random_transformation_monoid


@pytest.fixture
def T2():
    return fixtures.t2()


@pytest.fixture
def N3():
    return fixtures.n3()


@pytest.fixture
def O2():
    return fixtures.o2()


@pytest.fixture
def Z2():
    return fixtures.z2()


@pytest.fixture
def RZ21():
    return fixtures.rz2_1()


@pytest.fixture
def LZ21():
    return fixtures.lz2_1()


@st.composite
def small_monoids(draw, max_degree=4, max_gens=3):
    degree = draw(st.integers(1, max_degree))
    gens = draw(st.integers(1, max_gens))
    seed = draw(st.integers(0, 10_000))
    return random_transformation_monoid(degree, gens, seed, cap=300)


@st.composite
def random_acts(draw, max_carrier=8):
    """A random monoid acting on the points of its transformations' domain."""
    from pseudofin.acts import make_act
    from pseudofin.core import closure_from_transformations
    from pseudofin.errors import CapExceeded

    degree = draw(st.integers(1, max_carrier))
    k = draw(st.integers(1, 2))
    maps = [tuple(draw(st.lists(st.integers(0, degree - 1), min_size=degree, max_size=degree))) for _ in range(k)]
    try:
        S, elems = closure_from_transformations([tuple(range(degree))] + maps, cap=120)
    except CapExceeded:
        assume(False)
    action = np.array([[elems[s].images[a] for s in range(S.order)] for a in range(degree)])
    return make_act(S, action)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
