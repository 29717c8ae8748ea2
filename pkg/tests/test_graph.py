import pytest
from hypothesis import given
from hypothesis import strategies as st

from chainspectra.errors import InvalidN
from chainspectra.graph import (
    adjacency_json,
    block_partition,
    build_chain,
    edge_list_text,
    laplacian,
)
from chainspectra.matrix import IntMatrix, rank

LVV_1 = IntMatrix(
    [
        [2, -1, 0, 0, 0],
        [-1, 2, -1, 0, 0],
        [0, -1, 2, -1, 0],
        [0, 0, -1, 3, -1],
        [0, 0, 0, -1, 2],
    ]
)

ns = st.integers(min_value=1, max_value=10)


def simple_cycles_through(g, start_edge):
    """All simple cycles containing ``start_edge``, by DFS (tiny graphs only)."""
    adj = g.neighbours()
    u0, v0 = start_edge
    out = []

    def dfs(path, seen):
        last = path[-1]
        for w in adj[last]:
            if w == u0 and len(path) > 2:
                out.append(list(path))
            elif w not in seen:
                seen.add(w)
                path.append(w)
                dfs(path, seen)
                path.pop()
                seen.remove(w)

    dfs([u0, v0], {u0, v0})
    return out


def test_invalid_n():
    for bad in (0, -3):
        with pytest.raises(InvalidN):
            build_chain(bad)


def test_l1_counts_and_degrees():
    g = build_chain(1)
    assert g.order == 10
    assert len(g.edges) == 11
    assert g.degrees()[:5] == [2, 2, 2, 3, 2]


def test_rungs_n2():
    g = build_chain(2)
    assert g.rungs() == [1, 4, 5, 8, 9]


def test_octagon_face_n2():
    g = build_chain(2)
    h = g.half
    # 1-2-3-4-4'-3'-2'-1' is an induced 8-cycle
    cycle = [0, 1, 2, 3, 3 + h, 2 + h, 1 + h, h]
    es = set(g.edges)
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert (min(a, b), max(a, b)) in es
    # the shortest cycle through the top edge 1-2 has length 8, through 4-5 length 4
    assert min(len(c) for c in simple_cycles_through(g, (0, 1))) == 8
    assert min(len(c) for c in simple_cycles_through(g, (3, 4))) == 4


def test_l1_blocks():
    l11, l12 = block_partition(build_chain(1))
    assert l11 == LVV_1
    assert l12 == IntMatrix.diag([-1, 0, 0, -1, -1])
    assert laplacian(build_chain(1)).block(0, 0, 5) == LVV_1


def test_l1_rank():
    assert rank(laplacian(build_chain(1))) == 9


@given(ns)
def test_chain_invariants(n):
    g = build_chain(n)
    assert g.order == 8 * n + 2
    assert len(g.edges) == 10 * n + 1
    assert len(g.rungs()) == 2 * n + 1
    assert g.is_connected()
    assert g.is_mirror_symmetric()
    assert all(g.mirror(v) != v and g.mirror(g.mirror(v)) == v for v in range(g.order))
    assert set(g.degrees()) <= {2, 3}


@given(ns)
def test_laplacian_properties(n):
    g = build_chain(n)
    lap = laplacian(g)
    assert lap.order == 8 * n + 2
    assert lap.is_symmetric()
    assert all(sum(r) == 0 for r in lap.rows)
    assert lap.trace() == 2 * (10 * n + 1)
    es = set(g.edges)
    for i in range(lap.order):
        assert lap[i, i] == g.degrees()[i]
        for j in range(lap.order):
            if i != j:
                assert lap[i, j] == (-1 if (min(i, j), max(i, j)) in es else 0)


@given(ns)
def test_block_reassembly(n):
    g = build_chain(n)
    l11, l12 = block_partition(g)
    h = g.half
    lap = laplacian(g)
    assert lap.block(h, h, h) == l11
    assert lap.block(h, 0, h) == l12
    assert lap.block(0, h, h) == l12


@pytest.mark.parametrize("n", range(1, 11))
def test_difference_diagonal_pattern(n):
    l11, l12 = block_partition(build_chain(n))
    diag = (l11 - l12).diagonal()
    expected = [3] + [(4 if i % 4 in (0, 1) else 2) for i in range(2, 4 * n + 1)] + [3]
    assert list(diag) == expected


def test_edge_list_export():
    text = edge_list_text(build_chain(1))
    lines = text.splitlines()
    assert len(lines) == 11
    assert "1 1'" in lines and "4 4'" in lines and "5 5'" in lines
    assert "2 2'" not in lines


def test_adjacency_json_export():
    import json

    doc = json.loads(adjacency_json(build_chain(1)))
    assert doc["order"] == 10 and doc["size"] == 11 and doc["n"] == 1
    assert doc["adjacency"]["4"] == ["3", "5", "4'"]
    assert adjacency_json(build_chain(2)) == adjacency_json(build_chain(2))
