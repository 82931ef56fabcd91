"""Shared fixture graphs.

The two 5-vertex "house" graphs are K4 plus an apex vertex joined to two
(resp. one) of its vertices; the rigid 6-vertex graph has trivial
automorphism group and a fully split walk-count spectrum.
"""

import pytest

from qsymgraph import Graph


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def star4() -> Graph:
    return Graph.from_edges(4, [(1, 4), (2, 4), (3, 4)])


def paw() -> Graph:
    """Triangle with a pendant vertex."""
    return Graph.from_edges(4, [(1, 4), (2, 3), (2, 4), (3, 4)])


def diamond() -> Graph:
    """K4 minus one edge."""
    return Graph.from_edges(4, [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def house_x() -> Graph:
    """K4 on {1,2,3,4} plus apex 5 joined to 1 and 4 (house with both
    roof diagonals drawn)."""
    return Graph.from_edges(
        5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)])


def house_x_broken() -> Graph:
    """Same graph with the (4,5) roof edge removed; the apex hangs off 1."""
    return Graph.from_edges(
        5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)])


def rigid6() -> Graph:
    """Asymmetric 6-vertex graph; every walk-count class is a singleton."""
    return Graph.from_edges(6, [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6)])


def four_vertex_path() -> Graph:
    return Graph.from_edges(4, [(1, 4), (2, 3), (3, 4)])


def four_vertex_cycle() -> Graph:
    return Graph.from_edges(4, [(1, 3), (1, 4), (2, 3), (2, 4)])


# (name, builder, |Aut|, has quantum symmetries), in a fixed reporting order
FOUR_VERTEX_CASES = (
    ("star", star4, 6, False),
    ("path", four_vertex_path, 2, False),
    ("paw", paw, 2, False),
    ("cycle", four_vertex_cycle, 8, True),
    ("diamond", diamond, 4, True),
    ("complete", lambda: complete_graph(4), 24, True),
)


@pytest.fixture(scope="session")
def house():
    return house_x()


@pytest.fixture(scope="session")
def broken_house():
    return house_x_broken()
