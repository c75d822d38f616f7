"""Parametric graph families.

Labeling convention: the distinguished path ``v_1 .. v_{d+1}`` occupies
vertices ``0..d`` in order, and any clique / extra vertices follow in
ascending order.  ``CompleteMinusStar(n, s)`` puts the star centre at 0 and
deletes the edges ``0-1 .. 0-s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import ParameterError
from .graph import Graph


class FamilyKind(str, Enum):
    PATH = "Path"
    COMPLETE = "Complete"
    DOUBLE_STAR = "DoubleStar"
    GNDT = "Gndt"
    GN3_MINUS_2S = "Gn3Minus2s"
    GN3_MINUS_4S = "Gn3Minus4s"
    GNA = "GnA"
    GNAB = "GnAB"
    PNT_PLUSPLUS = "PnTplusplus"
    COMPLETE_MINUS_STAR = "CompleteMinusStar"


PARAM_NAMES: dict[FamilyKind, tuple[str, ...]] = {
    FamilyKind.PATH: ("n",),
    FamilyKind.COMPLETE: ("n",),
    FamilyKind.DOUBLE_STAR: ("n", "a"),
    FamilyKind.GNDT: ("n", "d", "t"),
    FamilyKind.GN3_MINUS_2S: ("n", "s"),
    FamilyKind.GN3_MINUS_4S: ("n", "s"),
    FamilyKind.GNA: ("n", "a"),
    FamilyKind.GNAB: ("n", "a", "b"),
    FamilyKind.PNT_PLUSPLUS: ("n", "t"),
    FamilyKind.COMPLETE_MINUS_STAR: ("n", "s"),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", FamilyKind(self.kind))
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def __str__(self) -> str:
        return f"{self.kind.value}({','.join(map(str, self.params))})"

    def as_dict(self) -> dict:
        return {"kind": self.kind.value, **dict(zip(PARAM_NAMES[self.kind], self.params))}


def _require(cond: bool, spec: FamilySpec, constraint: str) -> None:
    if not cond:
        raise ParameterError(f"{spec}: violates {constraint}")


def validate(spec: FamilySpec) -> None:
    names = PARAM_NAMES[spec.kind]
    if len(spec.params) != len(names):
        raise ParameterError(f"{spec.kind.value} takes parameters {names}, got {spec.params}")
    k, p = spec.kind, spec.params
    n = p[0]
    _require(n >= 1, spec, "n >= 1")
    if k is FamilyKind.DOUBLE_STAR:
        _require(1 <= p[1] <= n - 3, spec, "1 <= a <= n-3")
    elif k is FamilyKind.GNDT:
        d, t = p[1], p[2]
        _require(2 <= d <= n - 2, spec, "2 <= d <= n-2")
        _require(2 <= t <= d, spec, "2 <= t <= d")
    elif k in (FamilyKind.GN3_MINUS_2S, FamilyKind.GN3_MINUS_4S):
        _require(1 <= p[1] <= n - 4, spec, "1 <= s <= n-4")
    elif k is FamilyKind.GNA:
        _require(n >= 6, spec, "n >= 6")
        _require(1 <= p[1] <= n - 5, spec, "1 <= a <= n-5")
    elif k is FamilyKind.GNAB:
        a, b = p[1], p[2]
        _require(a >= 1 and b >= 1, spec, "a, b >= 1")
        _require(a + b <= n - 4, spec, "a + b <= n-4")
    elif k is FamilyKind.PNT_PLUSPLUS:
        _require(1 <= p[1] <= n - 3, spec, "1 <= t <= n-3")
    elif k is FamilyKind.COMPLETE_MINUS_STAR:
        _require(1 <= p[1] <= n - 2, spec, "1 <= s <= n-2")


def _path_edges(k: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(k - 1)]


def _clique_edges(vertices) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def make_family(spec: FamilySpec) -> Graph:
    validate(spec)
    k, p = spec.kind, spec.params
    n = p[0]
    if k is FamilyKind.PATH:
        return Graph(n, _path_edges(n))
    if k is FamilyKind.COMPLETE:
        return Graph(n, _clique_edges(range(n)))
    if k is FamilyKind.DOUBLE_STAR:
        # centres 1 and 2; 0 hangs on 1, 3 hangs on 2
        a = p[1]
        edges = _path_edges(4)
        extra = list(range(4, n))
        edges += [(1, x) for x in extra[: a - 1]]
        edges += [(2, x) for x in extra[a - 1 :]]
        return Graph(n, edges)
    if k is FamilyKind.GNDT:
        d, t = p[1], p[2]
        clique = range(d + 1, n)
        edges = _path_edges(d + 1) + _clique_edges(clique)
        edges += [(v, x) for x in clique for v in (t - 2, t - 1, t)]
        return Graph(n, edges)
    if k in (FamilyKind.GN3_MINUS_2S, FamilyKind.GN3_MINUS_4S):
        s = p[1]
        base = make_family(FamilySpec(FamilyKind.GNDT, (n, 3, 3)))
        hub = 1 if k is FamilyKind.GN3_MINUS_2S else 3
        dropped = {(hub, x) for x in range(n - s, n)}
        return Graph(n, [e for e in base.edges if e not in dropped])
    if k is FamilyKind.GNA:
        return make_family(FamilySpec(FamilyKind.GNAB, (n, p[1], n - 4 - p[1])))
    if k is FamilyKind.GNAB:
        a, b = p[1], p[2]
        clique = list(range(4, n))
        edges = _path_edges(4) + _clique_edges(clique)
        edges += [(v, x) for x in clique for v in (1, 2)]
        edges += [(0, x) for x in clique[:a]]
        edges += [(3, x) for x in clique[a : a + b]]
        return Graph(n, edges)
    if k is FamilyKind.PNT_PLUSPLUS:
        t = p[1]
        u = n - 1
        return Graph(n, _path_edges(n - 1) + [(t - 1, u), (t + 1, u)])
    if k is FamilyKind.COMPLETE_MINUS_STAR:
        s = p[1]
        return Graph(n, [e for e in _clique_edges(range(n)) if not (e[0] == 0 and e[1] <= s)])
    raise ParameterError(f"unknown family {k}")


def family(kind: str | FamilyKind, *params: int) -> Graph:
    """Shorthand: ``family("Gndt", 9, 4, 3)``."""
    return make_family(FamilySpec(FamilyKind(kind), tuple(params)))


def declared_diameter(spec: FamilySpec) -> int | None:
    """Diameter implied by the definition, or None when it is not fixed."""
    k, p = spec.kind, spec.params
    n = p[0]
    if k is FamilyKind.PATH:
        return n - 1
    if k is FamilyKind.COMPLETE:
        return 1 if n > 1 else 0
    if k is FamilyKind.GNDT:
        return p[1]
    if k in (FamilyKind.DOUBLE_STAR, FamilyKind.GN3_MINUS_2S, FamilyKind.GN3_MINUS_4S,
             FamilyKind.GNA, FamilyKind.GNAB):
        return 3
    if k is FamilyKind.PNT_PLUSPLUS:
        return n - 2
    if k is FamilyKind.COMPLETE_MINUS_STAR:
        return 2
    return None


def in_range_specs(kind: FamilyKind, n: int) -> list[FamilySpec]:
    """Every in-range parameter tuple of ``kind`` at order ``n``."""
    kind = FamilyKind(kind)
    cands: list[tuple[int, ...]]
    if kind in (FamilyKind.PATH, FamilyKind.COMPLETE):
        cands = [(n,)]
    elif kind is FamilyKind.GNDT:
        cands = [(n, d, t) for d in range(2, n - 1) for t in range(2, d + 1)]
    elif kind is FamilyKind.GNAB:
        cands = [(n, a, b) for a in range(1, n) for b in range(1, n) if a + b <= n - 4]
    else:
        cands = [(n, x) for x in range(0, n + 1)]
    out = []
    for c in cands:
        spec = FamilySpec(kind, c)
        try:
            validate(spec)
        except ParameterError:
            continue
        out.append(spec)
    return out
