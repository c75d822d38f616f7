"""Real intervals with explicit endpoint closure and exact rational endpoints."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, ParseError

Endpoint = Fraction | float  # float only for +/-inf or float-mode input


def _coerce(x) -> Endpoint:
    if isinstance(x, float):
        if math.isinf(x):
            return x
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class Interval:
    lo: Endpoint
    hi: Endpoint
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", _coerce(self.lo))
        object.__setattr__(self, "hi", _coerce(self.hi))
        if self.lo > self.hi:
            raise ParameterError(f"interval lower end {self.lo} exceeds upper end {self.hi}")
        if isinstance(self.lo, float) and self.lo_closed:
            object.__setattr__(self, "lo_closed", False)
        if isinstance(self.hi, float) and self.hi_closed:
            object.__setattr__(self, "hi_closed", False)

    @classmethod
    def closed(cls, lo, hi) -> Interval:
        return cls(lo, hi, True, True)

    @classmethod
    def open(cls, lo, hi) -> Interval:
        return cls(lo, hi, False, False)

    @classmethod
    def left_open(cls, lo, hi) -> Interval:
        return cls(lo, hi, False, True)

    def contains(self, x) -> bool:
        lo_ok = x >= self.lo if self.lo_closed else x > self.lo
        hi_ok = x <= self.hi if self.hi_closed else x < self.hi
        return lo_ok and hi_ok

    def __str__(self) -> str:
        def fmt(v):
            if isinstance(v, float):
                return "-inf" if v < 0 else "inf"
            return str(v)

        return f"{'[' if self.lo_closed else '('}{fmt(self.lo)},{fmt(self.hi)}{']' if self.hi_closed else ')'}"


_INTERVAL_RE = re.compile(r"^\s*([\[\(])\s*([^,]+?)\s*,\s*([^,]+?)\s*([\]\)])\s*$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_endpoint(tok: str, allow_float: bool) -> Endpoint:
    low = tok.lower()
    if low in ("inf", "+inf", "infinity"):
        return math.inf
    if low in ("-inf", "-infinity"):
        return -math.inf
    if _RATIONAL_RE.match(tok):
        value = Fraction(tok)
        return value
    if allow_float:
        try:
            return Fraction(float(tok))
        except ValueError:
            pass
    kind = "rational" if not allow_float else "number"
    raise ParseError(f"interval endpoint {tok!r} is not an exact {kind} (use forms like 5 or 7/2)")


def parse_interval(text: str, allow_float: bool = False) -> Interval:
    """Parse ``[a,b]``, ``(a,b]``, ``[a,b)`` or ``(a,b)``."""
    m = _INTERVAL_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse interval {text!r}; expected e.g. [2,3] or (5/2,7]")
    lo = _parse_endpoint(m.group(2), allow_float)
    hi = _parse_endpoint(m.group(3), allow_float)
    try:
        return Interval(lo, hi, m.group(1) == "[", m.group(4) == "]")
    except ParameterError as exc:
        raise ParseError(str(exc)) from None
