"""Exact eigenvalue counting for integer (and rational) symmetric matrices.

Everything here is arbitrary-precision integer or rational arithmetic; no
floating point is used.  The pipeline is

    characteristic polynomial  ->  square-free parts  ->  Sturm chains

and an interval count is the multiplicity-weighted sum of per-part Sturm
counts.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from .errors import ContractError, ParameterError
from .graph import Graph
from .interval import Interval
from .polynomial import IntPolynomial, RationalPolynomial, exact_quotient, poly_gcd, pseudo_remainder

Matrix = Sequence[Sequence[int]]


def _as_rows(m) -> list[list]:
    rows = m.tolist() if hasattr(m, "tolist") else [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParameterError("matrix must be square")
    return rows


def _faddeev_leverrier(rows: list[list], zero, div) -> list:
    n = len(rows)
    coeffs = [zero] * (n + 1)
    coeffs[n] = zero + 1
    # am holds A @ M_k; M_1 = I so A @ M_1 = A
    am = [list(r) for r in rows]
    for k in range(1, n + 1):
        tr = sum(am[i][i] for i in range(n))
        coeffs[n - k] = div(-tr, k)
        if k == n:
            break
        c = coeffs[n - k]
        mk = [list(r) for r in am]
        for i in range(n):
            mk[i][i] += c
        cols = list(zip(*mk))
        am = [[sum(a * b for a, b in zip(r, col) if a) for col in cols] for r in rows]
    return coeffs


def _exact_int_div(num: int, k: int) -> int:
    q, r = divmod(num, k)
    if r:
        raise ArithmeticError("Faddeev-LeVerrier division was not exact")
    return q


def char_poly(m: Matrix) -> IntPolynomial:
    """det(xI - M) of a square integer matrix (monic, degree n)."""
    rows = [[int(v) for v in r] for r in _as_rows(m)]
    if not rows:
        return IntPolynomial((1,))
    return IntPolynomial(_faddeev_leverrier(rows, 0, _exact_int_div))


def char_poly_rational(m) -> RationalPolynomial:
    """det(xI - M) for a square matrix with rational entries."""
    rows = [[Fraction(v) for v in r] for r in _as_rows(m)]
    if not rows:
        return RationalPolynomial((1,))
    return RationalPolynomial(_faddeev_leverrier(rows, Fraction(0), lambda a, k: a / k))


def square_free_parts(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition: p = c * prod(p_i ** i), p_i square-free and pairwise coprime.

    Returned parts are primitive with positive leading coefficient; parts of
    degree 0 are omitted.
    """
    if p.is_zero():
        raise ParameterError("square-free decomposition of the zero polynomial")
    f = p.primitive()
    if f.degree <= 0:
        return []
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = exact_quotient(f, a0)
    c = exact_quotient(df, a0)
    d = c - b.derivative()
    parts = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = c - b.derivative()
        if a.degree > 0:
            parts.append((a, i))
        i += 1
    return parts


def is_square_free(p: IntPolynomial) -> bool:
    if p.is_zero():
        return False
    return poly_gcd(p, p.derivative()).degree == 0


def _positive_content_reduce(p: IntPolynomial) -> IntPolynomial:
    g = p.content()
    return IntPolynomial(c // g for c in p.coeffs) if g > 1 else p


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm sequence built from sign-corrected primitive pseudo-remainders."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        e = a.degree - b.degree + 1
        r = pseudo_remainder(a, b)
        # prem = lc(b)^e * rem, and the chain needs -rem up to a positive factor
        if b.lc > 0 or e % 2 == 0:
            r = -r
        if r.is_zero():
            break
        chain.append(_positive_content_reduce(r))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_at(p: IntPolynomial, x) -> int:
    if isinstance(x, float) and math.isinf(x):
        return p.sign_at_infinity(1 if x > 0 else -1)
    return p.sign_at(x)


def sign_variations(chain: Sequence[IntPolynomial], x) -> int:
    changes = 0
    last = 0
    for q in chain:
        s = _sign_at(q, x)
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


def _count_with_chain(p: IntPolynomial, chain: Sequence[IntPolynomial], iv: Interval) -> int:
    if iv.lo == iv.hi:
        return int(iv.lo_closed and iv.hi_closed and _sign_at(p, iv.lo) == 0)
    count = sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi)  # roots in (lo, hi]
    if iv.lo_closed and _sign_at(p, iv.lo) == 0:
        count += 1
    if not iv.hi_closed and not isinstance(iv.hi, float) and _sign_at(p, iv.hi) == 0:
        count -= 1
    return count


def sturm_count(p: IntPolynomial, iv: Interval) -> int:
    """Number of distinct real roots of a square-free ``p`` inside ``iv``."""
    if not is_square_free(p):
        raise ContractError(f"sturm_count needs a square-free polynomial, got {p}")
    return _count_with_chain(p, sturm_chain(p), iv)


class ExactSpectrum:
    """Characteristic polynomial of an integer symmetric matrix, ready for counting.

    One square-free decomposition (and one Sturm chain per part) serves all
    subsequent interval and multiplicity queries.
    """

    def __init__(self, poly: IntPolynomial):
        if poly.is_zero():
            raise ParameterError("zero characteristic polynomial")
        self.poly = poly
        self.parts = square_free_parts(poly)
        self._chains = [sturm_chain(q) for q, _ in self.parts]

    @classmethod
    def of_matrix(cls, m: Matrix) -> ExactSpectrum:
        return cls(char_poly(m))

    @classmethod
    def of_graph(cls, g: Graph) -> ExactSpectrum:
        from .spectral import laplacian

        return cls(char_poly(laplacian(g)))

    @property
    def order(self) -> int:
        return self.poly.degree

    def count(self, iv: Interval) -> int:
        return sum(mult * _count_with_chain(q, chain, iv)
                   for (q, mult), chain in zip(self.parts, self._chains))

    def count_at_least(self, k) -> int:
        return self.count(Interval(k, math.inf, True, False))

    def multiplicity(self, value) -> int:
        value = Fraction(value)
        for q, mult in self.parts:
            if q.sign_at(value) == 0:
                return mult
        return 0

    def rational_root_multiplicities(self, candidates) -> dict[Fraction, int]:
        out = {}
        for c in candidates:
            m = self.multiplicity(c)
            if m:
                out[Fraction(c)] = m
        return out


def exact_interval_count(g: Graph, iv: Interval) -> int:
    return ExactSpectrum.of_graph(g).count(iv)


def eigenvalue_multiplicity_exact(g: Graph, value) -> int:
    return ExactSpectrum.of_graph(g).multiplicity(value)


def divides(divisor: IntPolynomial, p: IntPolynomial) -> bool:
    """True when ``divisor`` divides ``p`` in Q[x]."""
    _, r = p.to_rational().divmod(divisor.to_rational())
    return r.is_zero()
