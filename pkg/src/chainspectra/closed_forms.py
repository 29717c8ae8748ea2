"""Closed-form Kirchhoff index and spanning-tree count of L_n.

Every function here takes ``n`` alone and never builds a matrix. Each
headline quantity is computed by its closed form in Q(sqrt 14) and checked
on the spot against the minor-sequence identity it was derived from.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

import mpmath

from .errors import CoefficientMismatch, Mismatch, MismatchD, NonInteger
from .quadfield import A, B, SQRT14, QuadNumber, quad_to_int, quad_to_rational
from .sequences import c_by_recurrence, e_by_recurrence


def _pair(alpha, beta, k: int, sign: int = 1) -> QuadNumber:
    """``(alpha + beta s) A^k + sign (alpha - beta s) B^k`` with ``s = sqrt 14``."""
    u = QuadNumber(alpha, beta)
    return u * A ** k + sign * (u.conjugate() * B ** k)


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def partial_sums_convolution(n: int) -> tuple[int, int, int, int]:
    _check_n(n)
    c = c_by_recurrence(n)
    e = e_by_recurrence(n)
    d1 = sum(c[4 * k] * e[4 * (n - k)] for k in range(1, n))
    d2 = sum(c[4 * k + 1] * e[4 * (n - k - 1) + 3] for k in range(n))
    d3 = sum(c[4 * k + 2] * e[4 * (n - k - 1) + 2] for k in range(n))
    d4 = sum(c[4 * k + 3] * e[4 * (n - k - 1) + 1] for k in range(n))
    return d1, d2, d3, d4


def partial_sums_closed(n: int) -> tuple[QuadNumber, QuadNumber, QuadNumber, QuadNumber]:
    _check_n(n)
    s = SQRT14
    diff = A ** n - B ** n
    d1 = Fraction(n - 1, 56) * _pair(17380, 4645, n - 2) + s / 392 * (A ** (n - 1) - B ** (n - 1))
    d2 = Fraction(n, 56) * _pair(1508, 403, n - 1) + 11 * s / 392 * diff
    d3 = Fraction(n, 56) * _pair(1508, 403, n - 1) + 4 * s / 392 * diff
    d4 = Fraction(n, 56) * _pair(580, 155, n - 1) + s / 392 * diff
    return d1, d2, d3, d4


def partial_sums(n: int) -> tuple[QuadNumber, QuadNumber, QuadNumber, QuadNumber]:
    """D1..D4 in closed form, each confirmed against the literal convolution."""
    closed = partial_sums_closed(n)
    for j, (x, y) in enumerate(zip(closed, partial_sums_convolution(n)), start=1):
        if x != y:
            raise MismatchD(j, x, y)
    return closed


def b4n_closed(n: int) -> int:
    _check_n(n)
    val = Fraction(1, 196) * _pair(98, 33, n) + Fraction(9 * n, 14) * _pair(4, 1, n)
    return quad_to_int(val)


def b4n(n: int) -> int:
    """``(-1)^{4n} b_{4n}``: sum of the (4n)-order principal minors of L_S."""
    closed = b4n_closed(n)
    c = c_by_recurrence(n)
    e = e_by_recurrence(n)
    d = partial_sums(n)
    via_minors = c[4 * n] + e[4 * n] + sum(quad_to_int(x) for x in d)
    if closed != via_minors:
        raise CoefficientMismatch(f"b4n(n={n})", closed, via_minors)
    return closed


def det_LS_closed(n: int) -> int:
    _check_n(n)
    return quad_to_int(_pair(116, 31, n - 1, sign=-1) / SQRT14)


def det_LS(n: int) -> int:
    """``det(L_S)`` by closed form, checked against ``3 c_{4n} - c_{4n-1}``."""
    closed = det_LS_closed(n)
    c = c_by_recurrence(n)
    cofactor = 3 * c[4 * n] - c[4 * n - 1]
    if closed != cofactor:
        raise Mismatch(f"det_LS(n={n})", closed, cofactor)
    return closed


def kf_path(m: int) -> Fraction:
    if m < 1:
        raise ValueError("path order must be >= 1")
    return Fraction(m ** 3 - m, 6)


def kirchhoff(n: int) -> Fraction:
    _check_n(n)
    return 2 * kf_path(4 * n + 1) + Fraction((8 * n + 2) * b4n(n), det_LS(n))


def complexity(n: int) -> int:
    """Spanning-tree count: ``det_LS * (4n+1) / (8n+2)`` with the path-eigenvalue
    product replaced by its exact value ``4n+1``."""
    d = det_LS(n)
    tau, rem = divmod(d * (4 * n + 1), 8 * n + 2)
    if rem:
        raise NonInteger(f"det_LS({n}) = {d} is odd")
    return tau


def sine_product(n: int, dps: int = 60) -> mpmath.mpf:
    """``prod_{k=2}^{4n+1} 4 sin^2(pi (k-1) / (8n+2))`` at ``dps`` digits."""
    with mpmath.workdps(dps):
        return mpmath.fprod(
            4 * mpmath.sin(mpmath.pi * (k - 1) / (8 * n + 2)) ** 2 for k in range(2, 4 * n + 2)
        )


def complexity_by_sines(n: int, dps: int = 60) -> int:
    """Spanning-tree count from the unevaluated sine product, rounded."""
    with mpmath.workdps(dps):
        val = det_LS_closed(n) * sine_product(n, dps) / (8 * n + 2)
        return int(mpmath.nint(val))


def round_half_away(x: Fraction, places: int = 2) -> Decimal:
    """Exact decimal rounding of a rational, ties away from zero."""
    q = Decimal(10) ** -places
    scaled = abs(x) * 10 ** places
    whole = int(scaled + Fraction(1, 2))
    d = Decimal(whole).scaleb(-places).quantize(q, rounding=ROUND_HALF_UP)
    return -d if x < 0 else d


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


@dataclass
class IndexReport:
    n: int
    kf_exact: Fraction
    tau: int
    b4n: int
    detLS: int
    precision: int = 2
    provenance: dict = field(default_factory=dict)
    oracle: dict = field(default_factory=dict)

    @property
    def kf_float(self) -> Decimal:
        return round_half_away(self.kf_exact, self.precision)

    def to_dict(self) -> dict:
        doc = {
            "n": self.n,
            "kf_exact": fraction_str(self.kf_exact),
            "kf_float": str(self.kf_float),
            "tau": str(self.tau),
            "b4n": str(self.b4n),
            "detLS": str(self.detLS),
            "provenance": dict(self.provenance),
        }
        if self.oracle:
            doc["oracle"] = dict(self.oracle)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def index_report(n: int, precision: int = 2) -> IndexReport:
    d = det_LS(n)
    return IndexReport(
        n=n,
        kf_exact=kirchhoff(n),
        tau=complexity(n),
        b4n=b4n(n),
        detLS=d,
        precision=precision,
        provenance={
            "kf_exact": "closed-form",
            "kf_float": "closed-form",
            "tau": "closed-form",
            "b4n": "closed-form",
            "detLS": "closed-form",
        },
    )
