from __future__ import annotations

import hypothesis.strategies as st
import pytest

from prismdim.graph import Graph, graph_from_edge_list

_acceptance: dict[str, str] = {}


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    if n >= 2:
        pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        edges |= {(u, v) for u, v in draw(st.lists(pairs, max_size=2 * n)) if u != v}
    return graph_from_edge_list(sorted(edges), n)


@st.composite
def any_graphs(draw, max_n: int = 12) -> Graph:
    n = draw(st.integers(1, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    edges = [(u, v) for u, v in draw(st.lists(pairs, max_size=3 * n)) if u != v]
    return graph_from_edge_list(edges, n)


def complete(n: int) -> Graph:
    return graph_from_edge_list([(u, v) for u in range(n) for v in range(u + 1, n)], n)


def star(leaves: int) -> Graph:
    return graph_from_edge_list([(0, i) for i in range(1, leaves + 1)], leaves + 1)


def pytest_runtest_logreport(report: pytest.TestReport) -> None:
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        name = report.nodeid.split("::")[-1]
        if _acceptance.get(name) != "FAIL":
            _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter) -> None:
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[2])):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
