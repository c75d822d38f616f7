from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from laplab.errors import ContractError, ParameterError
from laplab.exact import (ExactSpectrum, char_poly, char_poly_rational, divides, eigenvalue_multiplicity_exact,
                          exact_interval_count, is_square_free, square_free_parts, sturm_chain, sturm_count)
from laplab.families import family
from laplab.graph import Graph, disjoint_union, is_connected
from laplab.interval import Interval
from laplab.partitions import parametric_polynomial
from laplab.polynomial import IntPolynomial
from laplab.spectral import laplacian

from conftest import random_graph

X = sympy.Symbol("x")


def spanning_trees(g: Graph) -> int:
    """Deletion-contraction on a multigraph edge list (independent of any spectrum)."""

    def count(n: int, edges: list[tuple[int, int]]) -> int:
        if n == 1:
            return 1
        edges = [e for e in edges if e[0] != e[1]]
        if not edges:
            return 0
        u, v = edges[0]
        rest = edges[1:]
        deleted = count(n, rest)
        merged = []
        for a, b in rest:
            a = u if a == v else a
            b = u if b == v else b
            a = a - 1 if a > v else a
            b = b - 1 if b > v else b
            merged.append((a, b))
        uu = u - 1 if u > v else u
        return deleted + count(n - 1, [(a, b) for a, b in merged if (a, b) != (uu, uu)])

    return count(g.n, list(g.edges))


def sympy_poly(p: IntPolynomial) -> sympy.Poly:
    return sympy.Poly(list(reversed(p.coeffs)), X)


class TestCharPoly:
    def test_examples(self):
        assert char_poly(laplacian(family("Complete", 3))).coeffs == (0, 9, -6, 1)
        assert char_poly(laplacian(family("Path", 2))).coeffs == (0, -2, 1)

    def test_matrix_tree_cross_check(self):
        g = family("Gndt", 6, 3, 3)
        p = char_poly(laplacian(g))
        assert p.degree == 6 and p.lc == 1 and p.coeffs[0] == 0
        assert abs(p.coeffs[1]) == 6 * spanning_trees(g)

    def test_matrix_tree_random(self, rng):
        for _ in range(25):
            g = random_graph(rng, int(rng.integers(2, 8)), 0.5)
            p = char_poly(laplacian(g))
            assert p.coeffs[0] == 0
            expected = g.n * spanning_trees(g) if is_connected(g) else 0
            assert (-1) ** (g.n - 1) * (p.coeffs[1] if len(p.coeffs) > 1 else 0) == expected

    def test_matches_sympy(self, rng):
        for _ in range(20):
            n = int(rng.integers(1, 9))
            m = rng.integers(-5, 6, size=(n, n))
            m = m + m.T
            ref = sympy.Matrix(m.tolist()).charpoly(X).all_coeffs()
            assert char_poly(m) == IntPolynomial(reversed([int(c) for c in ref]))

    def test_rational_matrix(self):
        m = [[Fraction(1, 2), 1], [1, Fraction(-1, 3)]]
        ref = sympy.Matrix([[sympy.Rational(1, 2), 1], [1, sympy.Rational(-1, 3)]]).charpoly(X).all_coeffs()
        assert list(reversed(char_poly_rational(m).coeffs)) == [Fraction(str(c)) for c in ref]

    def test_non_square(self):
        with pytest.raises(ParameterError):
            char_poly([[1, 2]])


class TestSquareFree:
    def test_examples(self):
        parts = square_free_parts(IntPolynomial((0, 9, -6, 1)))
        assert sorted((p.coeffs, m) for p, m in parts) == [((-3, 1), 2), ((0, 1), 1)]
        p = IntPolynomial((-2, 0, 1))
        assert square_free_parts(p) == [(p, 1)]
        es = ExactSpectrum.of_graph(family("CompleteMinusStar", 6, 2))
        assert es.rational_root_multiplicities(range(7)) == {6: 3, 5: 1, 3: 1, 0: 1}

    def test_zero_polynomial(self):
        with pytest.raises(ParameterError):
            square_free_parts(IntPolynomial())

    @given(st.lists(st.tuples(st.integers(-6, 6), st.integers(1, 4)), min_size=1, max_size=5, unique_by=lambda t: t[0]),
           st.integers(1, 5))
    @settings(max_examples=100, deadline=None)
    def test_reconstructs_product(self, roots, scale):
        p = IntPolynomial((scale,))
        for r, m in roots:
            p = p * IntPolynomial((-r, 1)) ** m
        parts = square_free_parts(p)
        rebuilt = IntPolynomial((1,))
        for q, m in parts:
            assert is_square_free(q)
            rebuilt = rebuilt * q ** m
        assert rebuilt == p.primitive()
        assert sum(m * q.degree for q, m in parts) == p.degree
        assert {m for _, m in parts} == {m for _, m in roots}

    def test_against_sympy_sqf(self, rng):
        for _ in range(20):
            g = random_graph(rng, int(rng.integers(2, 9)))
            p = char_poly(laplacian(g))
            ours = {m: q for q, m in square_free_parts(p)}
            ref = sympy_poly(p).sqf_list()[1]
            assert sorted(ours) == sorted(m for _, m in ref)
            for f, m in ref:
                assert sympy_poly(ours[m]).monic() == f.monic()


class TestSturm:
    def test_examples(self):
        p = IntPolynomial((-2, 0, 1))
        assert sturm_count(p, Interval.closed(1, 2)) == 1
        assert sturm_count(p, Interval.open(-2, 2)) == 2
        f = parametric_polynomial("h24_f", (10, 2))
        assert sturm_count(f, Interval.open(0, 1)) == 1

    def test_rejects_non_square_free(self):
        with pytest.raises(ContractError):
            sturm_count(IntPolynomial((0, 9, -6, 1)), Interval.closed(0, 4))

    def test_endpoint_rules(self):
        p = IntPolynomial.from_roots([1, 2, 3])
        assert sturm_count(p, Interval.closed(1, 3)) == 3
        assert sturm_count(p, Interval.open(1, 3)) == 1
        assert sturm_count(p, Interval(1, 3, False, True)) == 2
        assert sturm_count(p, Interval(1, 3, True, False)) == 2
        assert sturm_count(p, Interval.closed(2, 2)) == 1
        assert sturm_count(p, Interval(-math.inf, math.inf, False, False)) == 3
        assert sturm_count(p, Interval(Fraction(3, 2), Fraction(5, 2))) == 1

    def test_against_sympy_count_roots(self, rng):
        for _ in range(40):
            n = int(rng.integers(1, 7))
            m = rng.integers(-4, 5, size=(n, n))
            m = m + m.T
            for q, _ in square_free_parts(char_poly(m)):
                lo, hi = sorted(int(v) for v in rng.integers(-12, 13, size=2))
                ref = sympy_poly(q).count_roots(lo, hi)  # closed interval
                assert sturm_count(q, Interval.closed(lo, hi)) == ref
                chain = sturm_chain(q)
                assert chain[0] == q and chain[1] == q.derivative()

    def test_all_roots_real(self, rng):
        for _ in range(20):
            g = random_graph(rng, int(rng.integers(1, 10)))
            es = ExactSpectrum.of_graph(g)
            assert es.count(Interval(-math.inf, math.inf, False, False)) == g.n
            assert es.count(Interval.closed(0, g.n)) == g.n


class TestExactCounts:
    def test_examples(self):
        assert exact_interval_count(family("Complete", 5), Interval.closed(5, 5)) == 4
        assert exact_interval_count(family("Gndt", 8, 3, 3), Interval.closed(6, 8)) == 5
        assert exact_interval_count(family("Gndt", 8, 4, 3), Interval.closed(5, 8)) >= 5
        assert eigenvalue_multiplicity_exact(family("Complete", 6), 6) == 5
        assert eigenvalue_multiplicity_exact(family("DoubleStar", 8, 2), 1) >= 4
        g = disjoint_union([family("Path", 3), family("Path", 2)])
        assert eigenvalue_multiplicity_exact(g, 0) == 2
        assert eigenvalue_multiplicity_exact(family("Path", 3), Fraction(1, 2)) == 0

    def test_agrees_with_numpy_away_from_endpoints(self, rng):
        for _ in range(40):
            g = random_graph(rng, int(rng.integers(2, 11)))
            vals = np.linalg.eigvalsh(laplacian(g).astype(float))
            es = ExactSpectrum.of_graph(g)
            for _ in range(4):
                a, b = sorted(Fraction(int(v), 3) for v in rng.integers(0, 3 * g.n + 1, size=2))
                if any(abs(v - float(e)) < 1e-7 for v in vals for e in (a, b)):
                    continue
                assert es.count(Interval.closed(a, b)) == int(((vals >= a) & (vals <= b)).sum())

    def test_divides(self):
        p = IntPolynomial.from_roots([0, 3, 3])
        assert divides(IntPolynomial.from_roots([3]), p)
        assert not divides(IntPolynomial.from_roots([2]), p)
        assert divides(IntPolynomial((-6, 2)), p)  # 2(x-3) divides over Q
