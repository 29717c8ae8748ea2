"""The linear octagonal-quadrilateral chain L_n and small reference graphs.

Vertex ``i`` of the top path (1-based label ``"i"``) sits at index ``i-1``;
its mirror ``i'`` sits at index ``i-1 + (4n+1)``. Rungs ``(i, i')`` occur
exactly when ``i % 4`` is 0 or 1, which puts a quadrilateral at each end
and alternates octagons and quadrilaterals along the chain.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import InvalidN
from .matrix import IntMatrix


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1``."""

    order: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        canon = sorted({(min(u, v), max(u, v)) for u, v in self.edges})
        for u, v in canon:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge ({u}, {v}) out of range")
        object.__setattr__(self, "edges", tuple(canon))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(self.order)))

    def neighbours(self) -> list[list[int]]:
        adj = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        adj = self.neighbours()
        seen = {0}
        todo = deque([0])
        while todo:
            u = todo.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.order

    def with_edges(self, add=(), remove=()) -> Graph:
        drop = {(min(u, v), max(u, v)) for u, v in remove}
        kept = [e for e in self.edges if e not in drop]
        return Graph(self.order, tuple(kept) + tuple(add), self.labels)


@dataclass(frozen=True)
class ChainGraph(Graph):
    n: int = 1

    @property
    def half(self) -> int:
        return 4 * self.n + 1

    def mirror(self, v: int) -> int:
        """The fixed-point-free involution i <-> i'."""
        h = self.half
        return v + h if v < h else v - h

    def rungs(self) -> list[int]:
        """1-based positions ``i`` carrying a rung edge ``(i, i')``."""
        return [i for i in range(1, self.half + 1) if i % 4 in (0, 1)]

    def is_mirror_symmetric(self) -> bool:
        es = set(self.edges)
        for u, v in es:
            a, b = self.mirror(u), self.mirror(v)
            if (min(a, b), max(a, b)) not in es:
                return False
        return True

    def with_edges(self, add=(), remove=()) -> ChainGraph:
        drop = {(min(u, v), max(u, v)) for u, v in remove}
        kept = [e for e in self.edges if e not in drop]
        return ChainGraph(self.order, tuple(kept) + tuple(add), self.labels, n=self.n)


def build_chain(n: int) -> ChainGraph:
    if not isinstance(n, int) or n < 1:
        raise InvalidN(f"n must be a positive integer, got {n!r}")
    h = 4 * n + 1
    edges = []
    for i in range(h - 1):
        edges.append((i, i + 1))
        edges.append((i + h, i + 1 + h))
    for i in range(1, h + 1):
        if i % 4 in (0, 1):
            edges.append((i - 1, i - 1 + h))
    labels = tuple(str(i) for i in range(1, h + 1)) + tuple(f"{i}'" for i in range(1, h + 1))
    return ChainGraph(2 * h, tuple(edges), labels, n=n)


def path_graph(m: int) -> Graph:
    return Graph(m, tuple((i, i + 1) for i in range(m - 1)))


def cycle_graph(m: int) -> Graph:
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def complete_graph(m: int) -> Graph:
    return Graph(m, tuple((i, j) for i in range(m) for j in range(i + 1, m)))


def laplacian(g: Graph) -> IntMatrix:
    rows = [[0] * g.order for _ in range(g.order)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = -1
        rows[u][u] += 1
        rows[v][v] += 1
    return IntMatrix(rows)


def block_partition(g: ChainGraph) -> tuple[IntMatrix, IntMatrix]:
    """``(L_V1V1, L_V1V2)``, the top-left and top-right blocks of the Laplacian."""
    lap = laplacian(g)
    h = g.half
    return lap.block(0, 0, h), lap.block(0, h, h)


def edge_list_text(g: Graph) -> str:
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.edges)


def adjacency_json(g: Graph) -> str:
    adj = g.neighbours()
    doc = {
        "order": g.order,
        "size": len(g.edges),
        "vertices": list(g.labels),
        "adjacency": {g.labels[u]: [g.labels[w] for w in adj[u]] for u in range(g.order)},
    }
    if isinstance(g, ChainGraph):
        doc["n"] = g.n
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
