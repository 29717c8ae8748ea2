"""Exact arithmetic in the real quadratic field Q(sqrt 14).

Rationals are stdlib ``Fraction`` (always reduced, positive denominator);
integers are plain Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import NotRational

D = 14


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadNumber:
    """``a + b*sqrt(14)`` with rational ``a`` and ``b``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    @classmethod
    def coerce(cls, x) -> QuadNumber:
        if isinstance(x, QuadNumber):
            return x
        return cls(_frac(x), Fraction(0))

    # ring operations

    def __add__(self, other):
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return quad_mul(self, o)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - D * self.b * self.b

    def conjugate(self) -> QuadNumber:
        return QuadNumber(self.a, -self.b)

    def inverse(self) -> QuadNumber:
        nrm = self.norm()
        if nrm == 0:
            # the norm form has no nontrivial rational zeros since 14 is not a square
            raise ZeroDivisionError("division by zero in Q(sqrt 14)")
        c = self.conjugate()
        return QuadNumber(c.a / nrm, c.b / nrm)

    def __truediv__(self, other):
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadNumber.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return quad_pow(self.inverse(), -k)
        return quad_pow(self, k)

    def __eq__(self, other):
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self):
        return float(self.a) + float(self.b) * D ** 0.5

    def __repr__(self):
        return f"QuadNumber({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}√{D}"


def quad_mul(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return QuadNumber(x.a * y.a + D * x.b * y.b, x.a * y.b + x.b * y.a)


def quad_pow(x: QuadNumber, k: int) -> QuadNumber:
    """``x**k`` for ``k >= 0`` by square-and-multiply."""
    if k < 0:
        raise ValueError("quad_pow needs a non-negative exponent")
    result = ONE
    base = x
    while k:
        if k & 1:
            result = quad_mul(result, base)
        base = quad_mul(base, base)
        k >>= 1
    return result


def quad_conjugate(x: QuadNumber) -> QuadNumber:
    return x.conjugate()


def quad_to_rational(x: QuadNumber) -> Fraction:
    if x.b != 0:
        raise NotRational(f"{x} has a nonzero sqrt({D}) component")
    return x.a


def quad_to_int(x: QuadNumber) -> int:
    q = quad_to_rational(x)
    if q.denominator != 1:
        raise NotRational(f"{x} is rational but not an integer")
    return q.numerator


ZERO = QuadNumber(0, 0)
ONE = QuadNumber(1, 0)
SQRT14 = QuadNumber(0, 1)
A = QuadNumber(15, 4)
B = QuadNumber(15, -4)
