"""Splitting the chain Laplacian along its mirror involution.

``L_A = L11 + L12`` and ``L_S = L11 - L12``; the characteristic polynomial of
the whole Laplacian is the product of theirs. Polynomials are exact integer
coefficient lists. Numeric spectra (float) are only used as cross-checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import matrix as mx
from .errors import ConvergenceFailure, DimensionMismatch, FactorizationMismatch
from .graph import ChainGraph, block_partition, laplacian
from .matrix import IntMatrix

ZERO_TOL = 1e-9


@dataclass(frozen=True)
class CharPoly:
    """Coefficients of ``det(xI - M)``, leading term first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, power: int) -> int:
        """Coefficient of ``x**power``."""
        return self.coefficients[self.degree - power]

    def __mul__(self, other: CharPoly) -> CharPoly:
        return CharPoly(tuple(mx.poly_mul(self.coefficients, other.coefficients)))

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: tuple[float, ...]
    source: str

    def __len__(self):
        return len(self.eigenvalues)

    def nonzero(self, zeros: int = 1) -> tuple[float, ...]:
        """Drop the ``zeros`` smallest eigenvalues after checking they vanish."""
        head = self.eigenvalues[:zeros]
        if any(abs(v) > ZERO_TOL for v in head):
            raise ValueError(f"expected {zeros} zero eigenvalue(s), got {head}")
        return self.eigenvalues[zeros:]


def split(l11: IntMatrix, l12: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    if l11.order != l12.order:
        raise DimensionMismatch(f"block orders {l11.order} and {l12.order} differ")
    if not (l11.is_symmetric() and l12.is_symmetric()):
        raise DimensionMismatch("blocks must be symmetric")
    return l11 + l12, l11 - l12


def char_poly(m: IntMatrix) -> CharPoly:
    return CharPoly(tuple(mx.charpoly(m)))


def decompose(g: ChainGraph) -> tuple[IntMatrix, IntMatrix]:
    return split(*block_partition(g))


def verify_factorization(g: ChainGraph) -> dict:
    """Check ``P_L = P_LA * P_LS`` coefficient by coefficient.

    Raises :class:`FactorizationMismatch` at the first differing coefficient.
    """
    l11, l12 = block_partition(g)
    # a non-symmetric top-right block already breaks the involution; compare anyway
    la, ls = l11 + l12, l11 - l12
    p = char_poly(laplacian(g)).coefficients
    q = (char_poly(la) * char_poly(ls)).coefficients
    for i, (x, y) in enumerate(zip(p, q)):
        if x != y:
            raise FactorizationMismatch(g.n, i, x, y)
    return {
        "check": "factorization",
        "n": g.n,
        "status": "PASS",
        "detail": f"{len(p)} coefficients of P_L equal P_LA*P_LS",
    }


def transform_check(g: ChainGraph) -> dict:
    """Exact check that the orthogonal transform block-diagonalises L.

    With ``M = [[I, I], [I, -I]]`` we have ``T = M / sqrt 2``, so
    ``2 T L T' = M L M'`` is an integer matrix and must equal ``2 diag(L_A, L_S)``.
    """
    lap = laplacian(g)
    h = g.half
    rows = [[0] * (2 * h) for _ in range(2 * h)]
    for i in range(h):
        rows[i][i] = rows[i][i + h] = rows[i + h][i] = 1
        rows[i + h][i + h] = -1
    m = IntMatrix(rows)
    doubled = m @ lap @ m.transpose()
    l11, l12 = block_partition(g)
    la, ls = l11 + l12, l11 - l12
    off_zero = doubled.block(0, h, h) == IntMatrix.zeros(h) and doubled.block(h, 0, h) == IntMatrix.zeros(h)
    top_ok = doubled.block(0, 0, h) == la.scale(2)
    bottom_ok = doubled.block(h, h, h) == ls.scale(2)
    ok = off_zero and top_ok and bottom_ok
    detail = {
        "off_diagonal_zero": off_zero,
        "top_left_is_LA": top_ok,
        "bottom_right_is_LS": bottom_ok,
    }
    return {
        "check": "transform",
        "n": g.n,
        "status": "PASS" if ok else "FAIL",
        "detail": ", ".join(f"{k}={v}" for k, v in detail.items()),
    }


def path_eigenvalues(m: int) -> SpectralSummary:
    """Laplacian eigenvalues ``4 sin^2(pi i / 2m)``, ``i = 0..m-1``, of the m-vertex path."""
    if m < 1:
        raise ValueError("path order must be >= 1")
    vals = sorted(4.0 * math.sin(math.pi * i / (2 * m)) ** 2 for i in range(m))
    return SpectralSummary(tuple(vals), "path")


def numeric_spectrum(m: IntMatrix, source: str = "matrix") -> SpectralSummary:
    try:
        vals = np.linalg.eigvalsh(np.array(m.to_lists(), dtype=float))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return SpectralSummary(tuple(float(v) for v in np.sort(vals)), source)


def nullity(m: IntMatrix) -> int:
    return m.order - mx.rank(m)
