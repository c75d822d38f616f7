"""Simple undirected graphs on vertices 0..n-1 and basic graph operations."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import ConnectivityError, EditError, ParameterError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    Edges are kept twice: as a sorted tuple of ``(u, v)`` pairs with ``u < v``
    and as per-vertex neighbour bitmasks, so adjacency tests are O(1).
    """

    __slots__ = ("_n", "_edges", "_adj", "_canon")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ParameterError(f"graph order must be a positive integer, got {n!r}")
        adj = [0] * n
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            key = _norm(u, v)
            if key in seen:
                raise ParameterError(f"multi-edge {key}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._edges = tuple(sorted(seen))
        self._adj = tuple(adj)
        self._canon = None

    @classmethod
    def from_adjacency_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1]
        return cls(n, edges)

    @property
    def n(self) -> int:
        return self._n

    order = n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def size(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        m = self._adj[v]
        return [u for u in range(self._n) if m >> u & 1]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._adj]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"

    def __reduce__(self):
        return (Graph, (self._n, self._edges))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_adjacency_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise ParameterError("disjoint union needs at least one graph")
    edges: list[Edge] = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, edges)


def edit(g: Graph, add: Iterable[Sequence[int]] = (), remove: Iterable[Sequence[int]] = ()) -> Graph:
    """Return ``g`` with ``remove`` deleted and ``add`` inserted (removals first)."""
    current = set(g.edges)
    for e in remove:
        key = _norm(int(e[0]), int(e[1]))
        if key not in current:
            raise EditError(f"cannot remove {key}: not an edge", key)
        current.remove(key)
    for e in add:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise EditError(f"cannot add loop at {u}", (u, v))
        key = _norm(u, v)
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise EditError(f"cannot add {key}: endpoint outside 0..{g.n - 1}", key)
        if key in current:
            raise EditError(f"cannot add {key}: already an edge", key)
        current.add(key)
    return Graph(g.n, current)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


def is_tree(g: Graph) -> bool:
    return g.size == g.n - 1 and is_connected(g)


def distance_matrix(g: Graph) -> list[list[int]]:
    rows = [bfs_distances(g, v) for v in range(g.n)]
    if any(d < 0 for d in rows[0]):
        raise ConnectivityError("graph is disconnected")
    return rows


def eccentricities(g: Graph) -> list[int]:
    return [max(row) for row in distance_matrix(g)]


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


DEFAULT_PATH_CAP = 10_000


def diametral_paths(g: Graph, cap: int = DEFAULT_PATH_CAP) -> tuple[list[PathWitness], bool]:
    """Shortest paths whose length equals the diameter.

    Paths are produced in lexicographic order of their vertex sequence, with
    each undirected path reported once (first vertex < last vertex).  The
    second return value is True when the cap cut enumeration short.
    """
    if cap < 1:
        raise ParameterError("cap must be positive")
    dist = distance_matrix(g)
    d = max(max(row) for row in dist)
    paths: list[PathWitness] = []
    if d == 0:
        return [PathWitness((0,))], False

    def extend(prefix: list[int], targets: list[int]) -> bool:
        v = prefix[-1]
        step = len(prefix) - 1
        if step == d:
            paths.append(PathWitness(tuple(prefix)))
            return len(paths) > cap
        for u in g.neighbors(v):
            # stay on the BFS-layer DAG from prefix[0] towards some far endpoint
            if dist[prefix[0]][u] != step + 1:
                continue
            ahead = [t for t in targets if dist[u][t] == d - step - 1]
            if ahead:
                prefix.append(u)
                if extend(prefix, ahead):
                    return True
                prefix.pop()
        return False

    for s in range(g.n):
        targets = [t for t in range(s + 1, g.n) if dist[s][t] == d]
        if targets and extend([s], targets):
            return paths[:cap], True
    return paths, False
