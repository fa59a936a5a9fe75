import io
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from netdyn.graph import (
    Graph,
    GraphFormatError,
    Unreachable,
    all_pairs,
    common_neighbors,
    distance,
    edges_among,
    in_triangle,
    node_pair,
    read_edge_list,
    write_edge_list,
)


def test_node_pair_canonical():
    assert node_pair(3, 1) == (1, 3)
    assert node_pair(0, 2) == (0, 2)
    with pytest.raises(ValueError):
        node_pair(2, 2)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])


def test_degree_and_neighbors():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert g.degree(0) == 3
    assert g.neighbors(0) == frozenset({1, 2, 3})
    assert g.degree(2) == 1


def test_common_neighbors_k4():
    g = Graph(4, all_pairs(4))
    assert common_neighbors(g, (0, 1)) == 2


def test_common_neighbors_triangle():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert common_neighbors(g, (0, 1)) == 1


def test_edges_among():
    g = Graph(4, all_pairs(4))
    assert edges_among(g, []) == 0
    assert edges_among(g, [0, 1, 2]) == 3


def test_distance_and_unreachable():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert distance(g, 0, 3) == 3
    assert distance(g, 1, 1) == 0
    h = Graph(4, [(0, 1), (2, 3)])
    assert distance(h, 0, 3) == Unreachable
    assert math.isinf(distance(h, 0, 3))
    # unreachable compares above every finite threshold
    assert distance(h, 0, 3) > 10**9


def test_in_triangle():
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert in_triangle(g, 0)
    assert not in_triangle(g, 3)


def test_complement_roundtrip():
    g = Graph(5, [(0, 1), (2, 3)])
    assert g.complement().complement() == g


def test_is_connected():
    assert Graph(3, [(0, 1), (1, 2)]).is_connected()
    assert not Graph(3, [(0, 1)]).is_connected()
    assert Graph(1).is_connected()


def test_edge_list_roundtrip():
    g = Graph(5, [(0, 1), (1, 4), (2, 3)])
    buf = io.StringIO()
    write_edge_list(g, buf)
    buf.seek(0)
    assert read_edge_list(buf) == g


@pytest.mark.parametrize(
    "text",
    [
        "2 1\n0 0\n",          # self-loop
        "3 2\n0 1\n0 1\n",     # duplicate
        "2 1\n0 5\n",          # out of range
        "2 2\n0 1\n",          # count mismatch
    ],
)
def test_edge_list_rejects(text):
    with pytest.raises(GraphFormatError):
        read_edge_list(io.StringIO(text))


@given(st.integers(0, 12))
def test_all_pairs_count(n):
    pairs = all_pairs(n)
    assert len(pairs) == n * (n - 1) // 2
    assert all(u < v for u, v in pairs)


@given(st.integers(2, 10), st.data())
def test_distances_from_triangle_inequality(n, data):
    pool = all_pairs(n)
    edges = data.draw(st.lists(st.sampled_from(pool), unique=True)) if pool else []
    g = Graph(n, edges)
    d = g.distances_from(0)
    for u, v in g.edges:
        if d[u] != Unreachable:
            assert abs(d[u] - d[v]) <= 1
