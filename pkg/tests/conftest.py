from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from kdiameter.core import build_graph

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile("dev")

LENGTHS = st.sampled_from([1, 1, 1, 2, 3, Fraction(1, 2)])


@st.composite
def colored_graphs(draw, max_nodes=7, max_colors=3, connected=False, unit=False):
    """Small edge-colored multigraphs, optionally forced connected."""
    n = draw(st.integers(2, max_nodes))
    colors = [f"c{i}" for i in range(draw(st.integers(1, max_colors)))]
    length = st.just(1) if unit else LENGTHS
    edges = {}
    if connected:
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges[(u, v, draw(st.sampled_from(colors)))] = draw(length)
    extra = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.sampled_from(colors), length),
        max_size=n + 2,
    ))
    for u, v, c, l in extra:
        if u != v:
            edges.setdefault((min(u, v), max(u, v), c), l)
    return build_graph(n, [(u, v, l, c) for (u, v, c), l in edges.items()])


_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body sets ``.detail`` and asserts."""

    class Line:
        detail = ""

    line = Line()
    yield line
    rep = getattr(request.node, "rep_call", None)
    if rep is None or rep.skipped:
        status = "SKIP"
    else:
        status = "PASS" if rep.passed else "FAIL"
    _ACCEPTANCE.append((request.node.name, status, line.detail))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {name}: {detail}")
