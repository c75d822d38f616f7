"""Floating-point Laplacian spectra and numeric checks of the classical matrix inequalities.

Eigenvalues come from a cyclic Jacobi solver.  Every classification against
an endpoint uses the tolerance ``tol = 1e-9 * n``; counts that depend on an
eigenvalue within ``tol`` of an endpoint carry a boundary warning and
should be confirmed with :mod:`laplab.exact`.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ParameterError
from .graph import Graph, components, edit, is_tree, diameter, complement
from .graph_io import graph6_encode
from .interval import Interval
from .report import TheoremReport

TOL_PER_VERTEX = 1e-9
CLUSTER_FACTOR = 10.0


def laplacian(g: Graph) -> np.ndarray:
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1
    lap[np.diag_indices(g.n)] = g.degrees()
    return lap


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings of a round-robin tournament; each round holds disjoint (p, q) pairs."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for k in range(m // 2):
            a, b = players[k], players[m - 1 - k]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(a, vectors: bool = False, max_sweeps: int = 100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Rotations are ordered as a round-robin tournament, so each round is a set
    of disjoint plane rotations applied together; disjoint rotations commute,
    so this is exactly sequential cyclic Jacobi in that ordering.  Sweeps run
    until the off-diagonal Frobenius norm drops below ``1e-14 * n``.

    Returns eigenvalues in descending order (and the matching eigenvectors as
    columns when ``vectors`` is true).
    """
    A = np.array(a, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ParameterError("jacobi_eigh needs a square matrix")
    if not np.allclose(A, A.T, atol=0.0, rtol=0.0):
        raise ParameterError("jacobi_eigh needs a symmetric matrix")
    n = A.shape[0]
    V = np.eye(n)
    threshold = 1e-14 * max(n, 1)
    offmask = ~np.eye(n, dtype=bool)
    rounds = _round_robin(n) if n > 1 else []
    for _ in range(max_sweeps):
        if math.sqrt(float(np.sum(A[offmask] ** 2))) < threshold:
            break
        for p, q in rounds:
            apq = A[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            app, aqq = A[p, p], A[q, q]
            theta = (aqq - app) / (2.0 * apq)
            sgn = np.where(theta >= 0.0, 1.0, -1.0)
            t = sgn / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            J = np.eye(n)
            J[p, p] = c
            J[q, q] = c
            J[p, q] = s
            J[q, p] = -s
            A = J.T @ A @ J
            A[p, q] = 0.0
            A[q, p] = 0.0
            if vectors:
                V = V @ J
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    vals = np.diag(A).copy()
    order = np.argsort(-vals, kind="stable")
    if vectors:
        return vals[order], V[:, order]
    return vals[order]


class IntervalCount(NamedTuple):
    count: int
    boundary_warning: bool


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    tol: float

    @property
    def n(self) -> int:
        return len(self.values)

    def mu(self, i: int) -> float:
        """i-th largest eigenvalue, 1-based."""
        if not 1 <= i <= self.n:
            raise ParameterError(f"eigenvalue index {i} outside 1..{self.n}")
        return self.values[i - 1]

    def clusters(self) -> list[tuple[float, int]]:
        """(representative value, multiplicity); values split at gaps > 10*tol."""
        out: list[list[float]] = []
        for v in self.values:
            if out and out[-1][-1] - v <= CLUSTER_FACTOR * self.tol:
                out[-1].append(v)
            else:
                out.append([v])
        return [(sum(c) / len(c), len(c)) for c in out]

    def multiplicity(self, value: float) -> int:
        for rep, mult in self.clusters():
            if abs(rep - value) <= CLUSTER_FACTOR * self.tol:
                return mult
        return 0

    def to_dict(self) -> dict:
        return {"eigenvalues": list(self.values), "tol": self.tol}


def spectrum_of_matrix(m, tol: float | None = None) -> Spectrum:
    m = np.asarray(m)
    n = m.shape[0]
    vals = jacobi_eigh(m)
    return Spectrum(tuple(float(v) for v in vals), TOL_PER_VERTEX * n if tol is None else tol)


def spectrum(g: Graph) -> Spectrum:
    return spectrum_of_matrix(laplacian(g))


def count_interval(s: Spectrum, iv: Interval) -> IntervalCount:
    tol = s.tol
    count = 0
    warn = False
    lo, hi = float(iv.lo), float(iv.hi)
    for v in s.values:
        if math.isfinite(lo) and abs(v - lo) <= tol or math.isfinite(hi) and abs(v - hi) <= tol:
            warn = True
        lo_ok = v >= lo - tol if iv.lo_closed else v > lo + tol
        hi_ok = v <= hi + tol if iv.hi_closed else v < hi - tol
        if lo_ok and hi_ok:
            count += 1
    return IntervalCount(count, warn)


def path_spectrum_closed_form(n: int) -> Spectrum:
    if n < 1:
        raise ParameterError("path order must be >= 1")
    vals = tuple(4.0 * math.sin((n - j) * math.pi / (2 * n)) ** 2 for j in range(1, n + 1))
    return Spectrum(vals, TOL_PER_VERTEX * n)


def _label(g: Graph) -> str:
    return graph6_encode(g)


def check_complement_duality(g: Graph) -> TheoremReport:
    n = g.n
    if n < 2:
        return TheoremReport("COMPLEMENT_DUALITY", _label(g), False, False, notes=["needs n >= 2"])
    s, sc = spectrum(g), spectrum(complement(g))
    tol = 2 * s.tol
    diffs = [abs(s.mu(i) - (n - sc.mu(n - i))) for i in range(1, n)]
    return TheoremReport("COMPLEMENT_DUALITY", _label(g), True, max(diffs) <= tol,
                         witness={"max_deviation": max(diffs), "tol": tol})


def check_edge_interlacing(g: Graph, e: Sequence[int]) -> TheoremReport:
    h = edit(g, remove=[e])
    s, sh = spectrum(g), spectrum(h)
    tol = 2 * s.tol
    n = g.n
    ok = True
    worst = 0.0
    for i in range(1, n + 1):
        gap = s.mu(i) - sh.mu(i)
        worst = min(worst, gap)
        ok &= gap >= -tol
        if i < n:
            gap2 = sh.mu(i) - s.mu(i + 1)
            worst = min(worst, gap2)
            ok &= gap2 >= -tol
    ok &= abs(s.mu(n)) <= tol and abs(sh.mu(n)) <= tol
    return TheoremReport("EDGE_INTERLACING", f"{_label(g)} - {tuple(e)}", True, bool(ok),
                         witness={"mu_G": list(s.values), "mu_G_minus_e": list(sh.values),
                                  "worst_gap": worst})


def check_cauchy_interlacing(m, keep: Iterable[int]) -> TheoremReport:
    M = np.asarray(m, dtype=float)
    n = M.shape[0]
    keep = sorted(set(int(k) for k in keep))
    if not keep or keep[0] < 0 or keep[-1] >= n:
        raise ParameterError(f"keep must be a nonempty subset of 0..{n - 1}")
    p = len(keep)
    rho_m = jacobi_eigh(M)
    rho_b = jacobi_eigh(M[np.ix_(keep, keep)])
    tol = 2 * TOL_PER_VERTEX * n
    ok = all(rho_m[n - p + i] - tol <= rho_b[i] <= rho_m[i] + tol for i in range(p))
    return TheoremReport("CAUCHY_INTERLACING", f"order {n} keep {keep}", True, ok,
                         witness={"rho_M": rho_m.tolist(), "rho_B": rho_b.tolist()})


def _eigenspace(vals: np.ndarray, vecs: np.ndarray, value: float, width: float) -> np.ndarray:
    return vecs[:, np.abs(vals - value) <= width]


def _common_vector_exists(spaces: list[np.ndarray], n: int, tol: float) -> bool:
    # x lies in every space iff (I - P_k) x = 0 for all k: test the null space of the stack
    stack = np.vstack([np.eye(n) - Q @ Q.T for Q in spaces])
    sv = np.linalg.svd(stack, compute_uv=False)
    return bool(sv.size and sv[-1] <= math.sqrt(tol))


def _weyl_check(eigs, i: int, j: int, n: int) -> TheoremReport:
    (va, Va), (vb, Vb), (vs, Vs) = eigs
    tol = TOL_PER_VERTEX * n
    lhs = float(vs[i + j - 2])
    rhs = float(va[i - 1] + vb[j - 1])
    report = TheoremReport("WEYL", f"order {n} i={i} j={j}", True, lhs <= rhs + 2 * tol,
                           witness={"lhs": lhs, "rhs": rhs})
    if abs(lhs - rhs) <= tol:
        width = CLUSTER_FACTOR * tol
        spaces = [_eigenspace(vs, Vs, lhs, width), _eigenspace(va, Va, va[i - 1], width),
                  _eigenspace(vb, Vb, vb[j - 1], width)]
        consistent = _common_vector_exists(spaces, n, tol)
        report.witness["equality"] = True
        report.witness["common_eigenvector"] = consistent
        report.notes.append("equality case numerically consistent" if consistent
                            else "equality case without a common eigenvector (numerically inconsistent)")
    else:
        report.witness["equality"] = False
    return report


def _weyl_setup(a, b):
    A = np.asarray(a, dtype=float)
    B = np.asarray(b, dtype=float)
    if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ParameterError(f"Weyl check needs equal square shapes, got {A.shape} and {B.shape}")
    eigs = (jacobi_eigh(A, vectors=True), jacobi_eigh(B, vectors=True), jacobi_eigh(A + B, vectors=True))
    return A.shape[0], eigs


def check_weyl(a, b, i: int, j: int) -> TheoremReport:
    """rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B), indices 1-based, descending order.

    When the two sides agree within tol, the report also says whether the
    three eigenspaces share a vector, which equality requires.
    """
    n, eigs = _weyl_setup(a, b)
    if not (1 <= i <= n and 1 <= j <= n and i + j - 1 <= n):
        raise ParameterError(f"need 1 <= i, j and i + j - 1 <= n, got i={i}, j={j}, n={n}")
    return _weyl_check(eigs, i, j, n)


def weyl_all_pairs(a, b) -> list[TheoremReport]:
    n, eigs = _weyl_setup(a, b)
    return [_weyl_check(eigs, i, j, n) for i in range(1, n + 1) for j in range(1, n + 2 - i)]


def zero_multiplicity_is_components(g: Graph) -> TheoremReport:
    s = spectrum(g)
    zeros = sum(1 for v in s.values if abs(v) <= s.tol)
    comps = len(components(g))
    return TheoremReport("ZERO_MULT", _label(g), True, zeros == comps,
                         witness={"zero_multiplicity": zeros, "components": comps})


def doob_bound(d: int) -> float:
    return 2.0 * (1.0 - math.cos(math.pi / (d + 1)))


def doob_tree_bound(t: Graph) -> TheoremReport:
    if not is_tree(t) or t.n < 2:
        return TheoremReport("DOOB", _label(t), False, False, notes=["input is not a tree on >= 2 vertices"])
    d = diameter(t)
    s = spectrum(t)
    value = s.mu(t.n - 1)
    bound = doob_bound(d)
    return TheoremReport("DOOB", _label(t), True, value <= bound + s.tol,
                         witness={"d": d, "mu_n_minus_1": value, "bound": bound})


def spectra_csv(graphs: Iterable[Graph]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["graph6", "eigenvalues"])
    for g in graphs:
        s = spectrum(g)
        w.writerow([graph6_encode(g), " ".join(f"{v:.12g}" for v in s.values)])
    return buf.getvalue()


def spectrum_json(g: Graph, intervals: Sequence[Interval] = ()) -> str:
    s = spectrum(g)
    payload = {"graph6": graph6_encode(g), "eigenvalues": list(s.values), "tol": s.tol,
               "counts": []}
    for iv in intervals:
        c = count_interval(s, iv)
        payload["counts"].append({"interval": str(iv), "count": c.count,
                                  "boundary_warning": c.boundary_warning})
    return json.dumps(payload, sort_keys=True, indent=2)

