import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from iscwiener.params import ISCParams

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


@st.composite
def isc_params(draw, max_n=10, max_m=4):
    """Valid normalized tuples with p <= q <= n and matching parities."""
    n = draw(st.integers(1, max_n))
    choices = list(range(n % 2 or 2, n + 1, 2))
    p = draw(st.sampled_from(choices))
    q = draw(st.sampled_from([c for c in choices if c >= p]))
    m = draw(st.integers(1, max_m))
    return ISCParams(p, q, m, n)


def lattice_nx(intervals):
    """Independent networkx build of the induced lattice subgraph on row intervals."""
    cells = {(x, y) for y, (a, b) in enumerate(intervals) for x in range(a, b + 1)}
    g = nx.Graph()
    g.add_nodes_from(cells)
    for x, y in cells:
        for u in ((x + 1, y), (x, y + 1)):
            if u in cells:
                g.add_edge((x, y), u)
    return g


@pytest.fixture
def c4_rows():
    return [(0, 1), (0, 1)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
