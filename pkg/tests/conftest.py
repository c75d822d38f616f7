from __future__ import annotations

import networkx as nx
import numpy as np
import pytest

from laplab.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(pos[u], pos[v]) for u, v in h.edges])


def random_graph(rng: np.random.Generator, n: int, p: float | None = None) -> Graph:
    p = rng.uniform(0.15, 0.85) if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_relabel(g: Graph, rng: np.random.Generator) -> Graph:
    perm = rng.permutation(g.n)
    return Graph(g.n, [(int(perm[u]), int(perm[v])) for u, v in g.edges])


@pytest.fixture(scope="session")
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
