import math

import pytest
from hypothesis import strategies as st

from johnson_spectra import GraphParams


@st.composite
def canonical_params(draw, max_n=40):
    n = draw(st.integers(2, max_n))
    r = draw(st.integers(1, n // 2))
    s = draw(st.integers(0, r - 1))
    return GraphParams(n, r, s)


@st.composite
def any_params(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    r = draw(st.integers(1, n))
    s = draw(st.integers(0, r - 1))
    return GraphParams(n, r, s)


def small_instances(max_n=9, max_vertices=200):
    return [GraphParams(n, r, s)
            for n in range(2, max_n + 1)
            for r in range(1, n // 2 + 1)
            if math.comb(n, r) <= max_vertices
            for s in range(r)]


@pytest.fixture(scope="session")
def octahedron():
    from johnson_spectra import build_graph
    return build_graph((4, 2, 1))


@pytest.fixture(scope="session")
def petersen():
    from johnson_spectra import build_graph
    return build_graph((5, 2, 0))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
