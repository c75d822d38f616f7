"""Dense univariate polynomials over Z and Q (coefficients in ascending degree)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ContractError, ParameterError


def _strip(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in coeffs))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots) -> IntPolynomial:
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction | int) -> int:
        """Exact sign of p(x) for rational x, without building Fractions."""
        if isinstance(x, int):
            v = self(x)
        else:
            x = Fraction(x)
            num, den = x.numerator, x.denominator
            # den^deg * p(num/den) has the same sign since den > 0
            v = 0
            dpow = 1
            for c in reversed(self.coeffs):
                v = v * num + c * dpow
                dpow *= den
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, direction: int) -> int:
        if not self.coeffs:
            return 0
        s = (self.lc > 0) - (self.lc < 0)
        return s if direction > 0 or self.degree % 2 == 0 else -s

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def to_rational(self) -> RationalPolynomial:
        return RationalPolynomial(self.coeffs)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> IntPolynomial:
        return cls(int(c) for c in json.loads(text))

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def format_poly(coeffs, var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else f"{mag}*"
            body = head + (var if i == 1 else f"{var}^{i}")
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """lc(b)^max(deg a - deg b + 1, 0) * a  mod  b, computed in Z[x]."""
    if b.is_zero():
        raise ParameterError("division by the zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    e = max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [c * lb for c in r]
        for i, c in enumerate(b.coeffs):
            r[i + shift] -= lr * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e:
        r = [c * lb**e for c in r]
    return IntPolynomial(r)


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b when b divides a in Z[x]; raises ContractError otherwise."""
    if b.is_zero():
        raise ParameterError("division by the zero polynomial")
    r = list(a.coeffs)
    db = b.degree
    q = [0] * max(len(r) - db, 0)
    lb = b.lc
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c, rem = divmod(r[-1], lb)
        if rem:
            raise ContractError(f"{b} does not divide {a} over Z")
        q[shift] = c
        for i, bc in enumerate(b.coeffs):
            r[i + shift] -= c * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    if any(r):
        raise ContractError(f"{b} does not divide {a}")
    return IntPolynomial(q)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd (positive leading coefficient) via primitive PRS."""
    a, b = a.primitive(), b.primitive()
    if a.is_zero():
        return b
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, r.primitive()
    return a


@dataclass(frozen=True)
class RationalPolynomial:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: RationalPolynomial) -> RationalPolynomial:
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        a, b = list(self.coeffs), list(other.coeffs)
        size = max(len(a), len(b))
        a += [Fraction(0)] * (size - len(a))
        b += [Fraction(0)] * (size - len(b))
        return RationalPolynomial(x - y for x, y in zip(a, b))

    def divmod(self, other: RationalPolynomial) -> tuple[RationalPolynomial, RationalPolynomial]:
        if other.is_zero():
            raise ParameterError("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        q = [Fraction(0)] * max(len(r) - db, 0)
        while r and len(r) - 1 >= db:
            shift = len(r) - 1 - db
            c = r[-1] / other.lc
            q[shift] = c
            for i, bc in enumerate(other.coeffs):
                r[i + shift] -= c * bc
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return RationalPolynomial(q), RationalPolynomial(r)

    def monic(self) -> RationalPolynomial:
        return RationalPolynomial(c / self.lc for c in self.coeffs)

    def to_integer(self) -> IntPolynomial:
        """Primitive integer polynomial with the same roots (denominators cleared)."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return IntPolynomial(int(c * den) for c in self.coeffs).primitive()

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    def __str__(self) -> str:
        return format_poly(self.coeffs)
