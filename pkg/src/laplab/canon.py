"""Canonical labeling, isomorphism testing and enumeration of connected graphs.

Canonical labeling is individualization-refinement: equitable colour
refinement by neighbour counts, then backtracking over the first smallest
non-singleton cell.  The canonical labeling is the leaf with the largest
adjacency certificate.  Search branches are pruned with automorphisms,
seeded by twin transpositions and extended whenever two leaves coincide.
"""

from __future__ import annotations

import os
from functools import lru_cache
from collections.abc import Iterator

from .errors import CapabilityError, ParameterError
from .graph import Graph

DEFAULT_MAX_N = 9

CanonKey = tuple[int, int]


def _refine(cells: list[list[int]], adj: tuple[int, ...]) -> list[list[int]]:
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            smask = 0
            for v in cells[si]:
                smask |= 1 << v
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                counts = [(adj[v] & smask).bit_count() for v in cell]
                if min(counts) == max(counts):
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v, c in zip(cell, counts):
                    groups.setdefault(c, []).append(v)
                out.extend(groups[c] for c in sorted(groups))
                split = True
            if split:
                cells = out
                changed = True
                break
    return cells


def _certificate(perm: list[int], adj: tuple[int, ...]) -> int:
    cert = 0
    for j in range(1, len(perm)):
        mj = adj[perm[j]]
        for i in range(j):
            cert = (cert << 1) | (mj >> perm[i] & 1)
    return cert


def _twin_generators(n: int, adj: tuple[int, ...]) -> list[list[int]]:
    gens = []
    classes: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        # true twins share closed neighbourhoods, false twins open ones
        classes.setdefault((0, adj[v]), []).append(v)
        classes.setdefault((1, adj[v] | 1 << v), []).append(v)
    for members in classes.values():
        for a, b in zip(members, members[1:]):
            perm = list(range(n))
            perm[a], perm[b] = b, a
            gens.append(perm)
    return gens


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return ``(perm, certificate)``: ``perm[i]`` is the vertex given canonical label ``i``."""
    n, adj = g.n, g.masks
    gens = _twin_generators(n, adj)
    best: list = [None, None]  # certificate, perm

    def search(cells: list[list[int]], path: list[int]) -> None:
        cells = _refine(cells, adj)
        if len(cells) == n:
            perm = [c[0] for c in cells]
            cert = _certificate(perm, adj)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, perm
            elif cert == best[0]:
                gamma = [0] * n
                for a, b in zip(best[1], perm):
                    gamma[a] = b
                gens.append(gamma)
            return
        k = min(range(len(cells)), key=lambda i: (len(cells[i]) == 1, len(cells[i]), i))
        target = cells[k]
        tried: list[int] = []
        for v in target:
            if tried:
                usable = [p for p in gens if all(p[w] == w for w in path)]
                if usable:
                    roots = _orbit_roots(n, usable)
                    if any(roots[v] == roots[u] for u in tried):
                        continue
            rest = [w for w in target if w != v]
            search(cells[:k] + [[v], rest] + cells[k + 1:], path + [v])
            tried.append(v)

    search([list(range(n))], [])
    return best[1], best[0]


def canonical_form(g: Graph) -> CanonKey:
    """Hashable key equal for two graphs exactly when they are isomorphic."""
    key = g._canon
    if key is None:
        _, cert = canonical_labeling(g)
        key = (g.n, cert)
        g._canon = key
    return key


def canonical_graph(g: Graph) -> Graph:
    perm, _ = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(perm)}
    h = Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])
    h._canon = (g.n, _certificate(perm, g.masks))
    return h


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def max_order() -> int:
    raw = os.environ.get("LAPLAB_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"LAPLAB_MAX_N must be an integer, got {raw!r}") from None


def _check_order(n: int) -> None:
    if n < 1:
        raise ParameterError("order must be >= 1")
    ceiling = max_order()
    if n > ceiling:
        raise CapabilityError(
            f"n={n} exceeds the enumeration ceiling {ceiling}; set LAPLAB_MAX_N to raise it "
            "(expect long runtimes) or shard the work")


def _augment(level: list[Graph], k: int, subsets) -> list[Graph]:
    found: dict[CanonKey, Graph] = {}
    for parent in level:
        base = list(parent.masks)
        for s in subsets:
            masks = [m | ((s >> v & 1) << k) for v, m in enumerate(base)] + [s]
            child = Graph.from_adjacency_masks(masks)
            key = canonical_form(child)
            if key not in found:
                found[key] = canonical_graph(child)
    return [found[key] for key in sorted(found)]


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    prev = _connected(n - 1)
    k = n - 1
    return tuple(_augment(list(prev), k, range(1, 1 << k)))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    k = n - 1
    return tuple(_augment(list(_trees(n - 1)), k, [1 << v for v in range(k)]))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class, sorted by canonical key.

    Connected graphs of order n are generated by attaching a new vertex, with
    every nonempty neighbour set, to each representative of order n-1 (every
    connected graph has a non-cut vertex), keeping one graph per canonical form.
    """
    _check_order(n)
    yield from _connected(n)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Trees of order n, one per isomorphism class (leaf augmentation of smaller trees)."""
    _check_order(n)
    yield from _trees(n)


def count_connected(n: int) -> int:
    return sum(1 for _ in enumerate_connected(n))
