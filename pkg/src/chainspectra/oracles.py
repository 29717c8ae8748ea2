"""Brute-force ground truth for the closed forms.

Nothing in here uses the minor sequences or the quadratic field: resistances
come from exact grounded Laplacian solves, tree counts from Bareiss
determinants and characteristic polynomials, distances from BFS.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction

from .decomposition import char_poly, nullity, numeric_spectrum
from .errors import NonInteger, SingularSystem
from .graph import Graph, laplacian
from .matrix import adjugate_det, det

DEFAULT_RESISTANCE_CAP = 6


class ResistanceMatrix:
    """Symmetric matrix of exact effective resistances."""

    def __init__(self, entries: list[list[Fraction]]):
        self.entries = entries

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ResistanceMatrix):
            return NotImplemented
        return self.entries == other.entries

    def pairs(self):
        k = self.order
        for i in range(k):
            for j in range(i + 1, k):
                yield i, j, self.entries[i][j]

    def total(self) -> Fraction:
        return sum((r for _, _, r in self.pairs()), Fraction(0))


def resistance_matrix(g: Graph, ground: int = 0) -> ResistanceMatrix:
    """Effective resistances with every edge a unit resistor.

    Ground vertex ``ground`` and invert the reduced Laplacian exactly; column
    ``j`` of the inverse is the potential for a unit current injected at
    ``j`` and drawn out at the ground.
    """
    k = g.order
    if k == 1:
        return ResistanceMatrix([[Fraction(0)]])
    if not 0 <= ground < k:
        raise ValueError(f"ground vertex {ground} out of range")
    keep = [v for v in range(k) if v != ground]
    reduced = laplacian(g).submatrix(keep)
    try:
        adj, d = adjugate_det(reduced)
    except SingularSystem as exc:
        raise SingularSystem("grounded Laplacian is singular; graph disconnected?") from exc
    # potentials with the ground at 0
    pos = {v: i for i, v in enumerate(keep)}

    def green(u, v):
        if u == ground or v == ground:
            return 0
        return adj[pos[u]][pos[v]]

    out = [[Fraction(0)] * k for _ in range(k)]
    for u in range(k):
        for v in range(u + 1, k):
            r = Fraction(green(u, u) + green(v, v) - 2 * green(u, v), d)
            out[u][v] = out[v][u] = r
    return ResistanceMatrix(out)


def kirchhoff_by_resistance(g: Graph, ground: int = 0) -> Fraction:
    return resistance_matrix(g, ground).total()


def kirchhoff_by_spectrum(g: Graph) -> float:
    lap = laplacian(g)
    zeros = nullity(lap)
    if zeros != 1:
        raise ValueError("graph must be connected")
    nz = numeric_spectrum(lap, "L").nonzero(zeros)
    return g.order * sum(1.0 / mu for mu in nz)


def spanning_trees_mtt(g: Graph, i: int = 0) -> int:
    """Matrix Tree Theorem: determinant of the Laplacian with row/col ``i`` removed."""
    if g.order == 1:
        return 1
    return det(laplacian(g).delete(i))


def spanning_trees_spectral(g: Graph) -> int:
    """Product of nonzero Laplacian eigenvalues over the order, read exactly
    from the x^1 coefficient of the characteristic polynomial."""
    p = char_poly(laplacian(g))
    prod = abs(p.coeff(1))
    tau, rem = divmod(prod, g.order)
    if rem:
        raise NonInteger(f"eigenvalue product {prod} not divisible by {g.order}")
    return tau


def distance_matrix(g: Graph) -> list[list[int]]:
    adj = g.neighbours()
    out = []
    for s in range(g.order):
        dist = [-1] * g.order
        dist[s] = 0
        todo = deque([s])
        while todo:
            u = todo.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    todo.append(w)
        if min(dist) < 0:
            raise ValueError("graph must be connected")
        out.append(dist)
    return out


def wiener(g: Graph) -> int:
    dist = distance_matrix(g)
    return sum(dist[i][j] for i in range(g.order) for j in range(i + 1, g.order))
