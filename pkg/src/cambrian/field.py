"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Rational numbers are kept as ``int`` or ``fractions.Fraction``. Irrational
values are ``Surd`` instances ``a + b*sqrt(d)`` with ``b != 0``; every
operation that produces a rational result collapses back to a plain
rational, so rational-only computations never pay for the surd machinery.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

Number = Union[int, Fraction, "Surd"]


class FieldMismatch(ValueError):
    """Raised when values from two different quadratic fields are combined."""


def _rational(x) -> Fraction | int:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


@lru_cache(maxsize=None)
def is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def surd(a, b, d: int) -> Number:
    """Return ``a + b*sqrt(d)``, collapsing to a rational when ``b == 0``."""
    a, b = _rational(a), _rational(b)
    if b == 0:
        return a
    if not is_squarefree(d):
        raise ValueError(f"d must be a square-free integer > 1, got {d}")
    return Surd(a, b, d)


def _mk(a, b, d):
    if b == 0:
        return a.numerator if isinstance(a, Fraction) and a.denominator == 1 else a
    return Surd(a, b, d)


def sqrt(d: int) -> Number:
    """Exact square root of a square-free positive integer (or a perfect square)."""
    r = math.isqrt(d)
    if r * r == d:
        return r
    return surd(0, 1, d)


def _parts(x):
    """Split ``x`` into (rational part, surd coefficient, d or None)."""
    if isinstance(x, Surd):
        return x.a, x.b, x.d
    return _rational(x), 0, None


def _common_d(d1, d2):
    if d1 is None:
        return d2
    if d2 is None or d1 == d2:
        return d1
    raise FieldMismatch(f"cannot combine Q(sqrt({d1})) with Q(sqrt({d2}))")


class Surd:
    """An irrational element ``a + b*sqrt(d)`` of a real quadratic field."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = a
        self.b = b
        self.d = d

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            a2, b2, d2 = _parts(other)
        except TypeError:
            return NotImplemented
        d = _common_d(self.d, d2)
        return _mk(self.a + a2, self.b + b2, d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            a2, b2, d2 = _parts(other)
        except TypeError:
            return NotImplemented
        d = _common_d(self.d, d2)
        return _mk(self.a - a2, self.b - b2, d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            a2, b2, d2 = _parts(other)
        except TypeError:
            return NotImplemented
        d = _common_d(self.d, d2)
        a, b = self.a, self.b
        return _mk(a * a2 + b * b2 * d, a * b2 + b * a2, d)

    __rmul__ = __mul__

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.d)

    def norm(self):
        """Field norm ``a^2 - d*b^2`` (a nonzero rational)."""
        return _rational(self.a * self.a - self.d * self.b * self.b)

    def inverse(self) -> Number:
        n = Fraction(self.norm())
        return _mk(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, Surd):
            return self * other.inverse()
        try:
            o = _rational(other)
        except TypeError:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero")
        o = Fraction(o)
        return _mk(self.a / o, self.b / o, self.d)

    def __rtruediv__(self, other):
        try:
            o = _rational(other)
        except TypeError:
            return NotImplemented
        return self.inverse() * o

    # order ----------------------------------------------------------------
    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d*b^2 (never equal, d square-free)
        return sa if self.a * self.a > self.d * self.b * self.b else sb

    def _cmp(self, other) -> int:
        diff = self - other
        return diff.sign() if isinstance(diff, Surd) else (diff > 0) - (diff < 0)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, Surd):
            return self.a == other.a and self.b == other.b and self.d == other.d
        return False  # an irrational never equals a rational

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return True

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"Surd({self.a}, {self.b}, {self.d})"

    def __str__(self):
        b = "" if self.b == 1 else ("-" if self.b == -1 else f"{self.b}*")
        root = f"{b}sqrt({self.d})"
        if self.a == 0:
            return root
        if root.startswith("-"):
            return f"{self.a}{root}"
        return f"{self.a}+{root}"


def sign(x) -> int:
    """Exact sign of a field element."""
    if isinstance(x, Surd):
        return x.sign()
    return (x > 0) - (x < 0)


def field_of(x) -> int:
    """Square-free ``d`` of the field containing ``x`` (1 for rationals)."""
    return x.d if isinstance(x, Surd) else 1


def to_float(x) -> float:
    return float(x)


def exact(x) -> Number:
    """Coerce an int, Fraction or Surd into canonical exact form."""
    if isinstance(x, Surd):
        return x
    return _rational(x)


def to_json(x) -> dict:
    """Serialize as ``{num, den, surd_num, surd_den}`` (plus ``d`` for surds)."""
    a, b, d = _parts(x)
    a, b = Fraction(a), Fraction(b)
    out = {"num": a.numerator, "den": a.denominator,
           "surd_num": b.numerator, "surd_den": b.denominator}
    if d is not None:
        out["d"] = d
    return out


def from_json(obj, d: int = 1) -> Number:
    """Inverse of :func:`to_json`; plain numbers and strings like "1/2" are accepted."""
    if isinstance(obj, (int, str)):
        return _rational(Fraction(obj))
    if isinstance(obj, float):
        raise TypeError("floating point entries are not exact; use {num, den}")
    a = Fraction(obj.get("num", 0), obj.get("den", 1))
    b = Fraction(obj.get("surd_num", 0), obj.get("surd_den", 1))
    dd = obj.get("d", d)
    if b != 0 and dd == 1:
        raise ValueError("surd part given without a square-free d > 1")
    if b != 0 and not is_squarefree(dd):
        raise ValueError(f"d must be square-free, got {dd}")
    return _mk(_rational(a), _rational(b), dd)


def div(x, y) -> Number:
    """Exact quotient ``x / y``; never falls back to floating point."""
    if isinstance(y, Surd):
        return x * y.inverse()
    if isinstance(x, Surd):
        return x / y
    q = Fraction(x) / y
    return q.numerator if q.denominator == 1 else q
