"""Dense integer matrices and the exact kernels run on them.

Everything here stays in Python ints: determinants and inverses by Bareiss
fraction-free elimination, characteristic polynomials by Berkowitz's
division-free recurrence.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularSystem


class IntMatrix:
    """Immutable square integer matrix, stored row-major as tuples."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("IntMatrix must be square")
        self._rows = rows

    @classmethod
    def zeros(cls, order: int) -> IntMatrix:
        return cls([[0] * order for _ in range(order)])

    @classmethod
    def diag(cls, values: Sequence[int]) -> IntMatrix:
        k = len(values)
        return cls([[values[i] if i == j else 0 for j in range(k)] for i in range(k)])

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self._rows]})"

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self._rows[i][i] for i in range(self.order))

    def trace(self) -> int:
        return sum(self.diagonal())

    def is_symmetric(self) -> bool:
        k = self.order
        return all(self._rows[i][j] == self._rows[j][i] for i in range(k) for j in range(i))

    def _check_same(self, other: IntMatrix):
        if self.order != other.order:
            raise DimensionMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix([c * v for v in r] for r in self._rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        cols = list(zip(*other._rows))
        return IntMatrix(
            [sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows
        )

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows))

    def submatrix(self, keep: Sequence[int]) -> IntMatrix:
        """Principal submatrix on the index list ``keep``."""
        return IntMatrix([self._rows[i][j] for j in keep] for i in keep)

    def delete(self, *indices: int) -> IntMatrix:
        drop = set(indices)
        return self.submatrix([i for i in range(self.order) if i not in drop])

    def block(self, r0: int, c0: int, size: int) -> IntMatrix:
        return IntMatrix(
            [self._rows[r0 + i][c0 + j] for j in range(size)] for i in range(size)
        )

    def reversed(self) -> IntMatrix:
        """Conjugate by the reversal permutation (i -> order-1-i)."""
        return IntMatrix([list(reversed(r)) for r in reversed(self._rows)])


def det(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss elimination (all divisions are exact)."""
    a = m.to_lists() if isinstance(m, IntMatrix) else [list(r) for r in m]
    k = len(a)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for p in range(k - 1):
        if a[p][p] == 0:
            for r in range(p + 1, k):
                if a[r][p] != 0:
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[p][p]
        rp = a[p]
        for i in range(p + 1, k):
            ri = a[i]
            f = ri[p]
            for j in range(p + 1, k):
                ri[j] = (piv * ri[j] - f * rp[j]) // prev
            ri[p] = 0
        prev = piv
    return sign * a[k - 1][k - 1]


def rank(m: IntMatrix) -> int:
    """Rank over Q by fraction-free row reduction."""
    a = m.to_lists()
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            a[i] = [(piv * x - f * y) // prev for x, y in zip(a[i], a[r])]
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def adjugate_det(m: IntMatrix) -> tuple[list[list[int]], int]:
    """Return ``(adj(m), det(m))`` by fraction-free Gauss-Jordan on ``[m | I]``.

    ``m^{-1} = adj / det``. Raises :class:`SingularSystem` when ``det == 0``.
    """
    k = m.order
    a = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(m.rows)]
    prev = 1
    sign = 1
    for p in range(k):
        if a[p][p] == 0:
            for r in range(p + 1, k):
                if a[r][p] != 0:
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                raise SingularSystem("matrix is singular")
        piv = a[p][p]
        rp = a[p]
        for i in range(k):
            if i == p:
                continue
            ri = a[i]
            f = ri[p]
            a[i] = [(piv * x - f * y) // prev for x, y in zip(ri, rp)]
        prev = piv
    # after the last step every diagonal entry equals +-det and the right half is +-adj
    d = a[k - 1][k - 1]
    adj = [row[k:] for row in a]
    if sign < 0:
        d = -d
        adj = [[-v for v in row] for row in adj]
    return adj, d


def solve(m: IntMatrix, rhs: Sequence[int]) -> list[Fraction]:
    """Exact solution of ``m x = rhs`` for nonsingular ``m``."""
    adj, d = adjugate_det(m)
    return [Fraction(sum(a * b for a, b in zip(row, rhs)), d) for row in adj]


def charpoly(m: IntMatrix) -> list[int]:
    """Coefficients of ``det(xI - m)``, leading (monic) term first.

    Berkowitz's algorithm, with the ``A_r v`` products done on sparse rows so
    that banded graph Laplacians cost O(order^3) big-int operations.
    """
    k = m.order
    if k == 0:
        return [1]
    rows = m.rows
    sparse = [[(j, v) for j, v in enumerate(r) if v] for r in rows]
    poly = [1, -rows[0][0]]
    for r in range(1, k):
        # bordered step: leading r x r block M_r, column C, row R, corner a_rr
        col = [rows[i][r] for i in range(r)]
        row_r = [(j, v) for j, v in sparse[r] if j < r]
        arr = rows[r][r]
        # t[s] = R M_r^{s-1} C for s >= 1; t[0] = 1, t[1] = -arr handled below
        toeplitz = [1, -arr]
        v = col
        for _ in range(r):
            toeplitz.append(-sum(val * v[j] for j, val in row_r))
            v = [sum(val * v[j] for j, val in sparse[i] if j < r) for i in range(r)]
        # new poly = T (r+2 x r+1 lower-triangular Toeplitz) @ poly
        new = [0] * (r + 2)
        for i in range(r + 2):
            acc = 0
            for j in range(min(i, r) + 1):
                acc += toeplitz[i - j] * poly[j]
            new[i] = acc
        poly = new
    return poly


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out
