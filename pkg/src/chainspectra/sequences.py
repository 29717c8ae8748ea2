"""Leading (c_k) and trailing (e_k) corner minors of L_S.

Three independent routes: the four-branch recurrences, the closed forms in
powers of A = 15 + 4 sqrt 14 and B = 15 - 4 sqrt 14, and plain Bareiss
determinants of corner submatrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import RecurrenceMismatch
from .matrix import IntMatrix, det
from .quadfield import A, B, SQRT14, QuadNumber, quad_to_int

# first two periods of each sequence
C_SEED = (3, 5, 7, 23, 85, 147, 209, 689)
E_SEED = (3, 11, 19, 27, 89, 329, 569, 809)

# multiplier on the previous term for branches r = 1..4 of index 4i + r
C_MULT = (4, 2, 2, 4)
E_MULT = (4, 4, 2, 2)

# (alpha, beta): term = ((alpha + beta s) A^i - (alpha - beta s) B^i) / (2 s), s = sqrt 14
C_COEFFS = {1: (10, 3), 2: (18, 5), 3: (26, 7), 4: (86, 23)}
E_COEFFS = {1: (11, 3), 2: (41, 11), 3: (71, 19), 4: (101, 27)}

# 1 / (2 sqrt 14) = sqrt 14 / 28
_INV_2SQRT14 = SQRT14 / 28


@dataclass(frozen=True)
class MinorSequence:
    kind: Literal["leading", "trailing"]
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        """1-based access: ``seq[k]`` is the k-th minor."""
        if k < 1:
            raise IndexError(k)
        return self.values[k - 1]

    def __len__(self):
        return len(self.values)


def _by_recurrence(n: int, seed, mult, kind) -> MinorSequence:
    if n < 1:
        raise ValueError("n must be >= 1")
    vals = list(seed[:4])
    for k in range(5, 4 * n + 1):
        r = (k - 1) % 4
        vals.append(mult[r] * vals[k - 2] - vals[k - 3])
    seq = MinorSequence(kind, tuple(vals[: 4 * n]))
    check_second_layer(seq)
    return seq


def c_by_recurrence(n: int) -> MinorSequence:
    return _by_recurrence(n, C_SEED, C_MULT, "leading")


def e_by_recurrence(n: int) -> MinorSequence:
    return _by_recurrence(n, E_SEED, E_MULT, "trailing")


def check_second_layer(seq: MinorSequence) -> int:
    """Assert ``x_{k} = 30 x_{k-4} - x_{k-8}`` for every ``k > 8``; return the count checked."""
    count = 0
    for k in range(9, len(seq) + 1):
        lhs = seq[k]
        rhs = 30 * seq[k - 4] - seq[k - 8]
        if lhs != rhs:
            raise RecurrenceMismatch(f"{seq.kind} index {k}", lhs, rhs)
        count += 1
    return count


def _closed(coeffs, i: int, r: int) -> int:
    if i < 0 or r not in coeffs:
        raise ValueError(f"need i >= 0 and r in 1..4, got i={i}, r={r}")
    alpha, beta = coeffs[r]
    u = QuadNumber(alpha, beta)
    val = (u * A ** i - u.conjugate() * B ** i) * _INV_2SQRT14
    return quad_to_int(val)


def c_closed(i: int, r: int) -> int:
    """Closed form of ``c_{4i+r}``."""
    return _closed(C_COEFFS, i, r)


def e_closed(i: int, r: int) -> int:
    """Closed form of ``e_{4i+r}``."""
    return _closed(E_COEFFS, i, r)


def closed_value(kind: str, k: int) -> int:
    i, r = divmod(k - 1, 4)
    return (c_closed if kind == "leading" else e_closed)(i, r + 1)


def principal_minor(m: IntMatrix, k: int, side: Literal["leading", "trailing"]) -> int:
    if not 1 <= k <= m.order:
        raise ValueError(f"k={k} outside 1..{m.order}")
    if side == "leading":
        idx = range(k)
    elif side == "trailing":
        idx = range(m.order - k, m.order)
    else:
        raise ValueError(f"unknown side {side!r}")
    return det(m.submatrix(list(idx)))
