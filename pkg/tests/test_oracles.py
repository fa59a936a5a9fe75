import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netdyn.generators import clique, cycle, g_s, path, random_connected_graph, star
from netdyn.graph import Graph, all_pairs
from netdyn.oracles import (
    DisconnectedGraphError,
    alpha_core,
    distinct_degree_count,
    expected_cycle_size,
    gs_expected_neighbors,
    rule110_direct,
    shortest_path_edges_between,
    shortest_path_edges_from,
)


def test_alpha_core_clique():
    nodes, core = alpha_core(clique(5), 3)
    assert nodes == set(range(5))
    assert core == clique(5)


def test_alpha_core_peels_path():
    nodes, core = alpha_core(path(6), 2)
    assert nodes == set()
    assert core.num_edges() == 0


def test_alpha_core_mixed():
    # a triangle with a pendant: 2-core is the triangle
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    nodes, core = alpha_core(g, 2)
    assert nodes == {0, 1, 2}
    assert core.edges == frozenset({(0, 1), (1, 2), (0, 2)})


def test_shortest_path_edges_from_star():
    g = star(7)
    assert shortest_path_edges_from(g, 0) == set(g.edges)


def test_shortest_path_edges_from_cycle():
    # every edge of C6 joins consecutive BFS layers (0,1,2,3,2,1)
    got = shortest_path_edges_from(cycle(6), 0)
    assert got == set(cycle(6).edges)


def test_shortest_path_oracles_reject_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        shortest_path_edges_from(g, 0)
    with pytest.raises(DisconnectedGraphError):
        shortest_path_edges_between(g, 0, 3)


def brute_force_between(g: Graph, s: int, t: int) -> set:
    # enumerate all shortest paths explicitly
    dist = g.distances_from(s)
    d = dist[t]
    best: set = set()

    def extend(u, length, edges_used):
        if length > d:
            return
        if u == t and length == d:
            best.update(edges_used)
            return
        for v in g.neighbors(u):
            if dist[v] == dist[u] + 1:
                extend(v, length + 1, edges_used + [tuple(sorted((u, v)))])

    extend(s, 0, [])
    return best


def test_shortest_path_edges_between_vs_enumeration():
    for seed in range(20):
        g = random_connected_graph(9, 0.35, seed)
        s, t = 0, 8
        assert shortest_path_edges_between(g, s, t) == brute_force_between(g, s, t)


def test_shortest_path_edges_between_radius_cutoff():
    g = path(12)
    full = shortest_path_edges_between(g, 0, 4)
    cut = shortest_path_edges_between(g, 0, 4, radius=5)
    assert full == cut == {(i, i + 1) for i in range(4)}


def test_rule110_direct_known_rows():
    # one live cell spreads left under the elementary rule on a ring
    rows = rule110_direct([0, 0, 0, 1, 0], 2)
    assert rows[0] == [0, 0, 0, 1, 0]
    assert rows[1] == [0, 0, 1, 1, 0]
    assert rows[2] == [0, 1, 1, 1, 0]


def test_rule110_direct_all_patterns():
    # the rule number itself: neighborhood k maps to bit k of 110
    for bits in itertools.product((0, 1), repeat=3):
        tape = [bits[0], bits[1], bits[2]]
        got = rule110_direct(tape, 1)[1][1]
        k = bits[0] * 4 + bits[1] * 2 + bits[2]
        assert got == (110 >> k) & 1


def test_rule110_direct_validation():
    with pytest.raises(ValueError):
        rule110_direct([0, 1], 1)
    with pytest.raises(ValueError):
        rule110_direct([0, 2, 0], 1)


def test_gs_expected_neighbors_match_generator():
    for S in (5, 7):
        g = g_s(S)
        for x in range(S):
            for y in range(S):
                assert g.neighbors(x * S + y) == gs_expected_neighbors(S, 0, x, y)


def test_expected_cycle_size_values():
    # modular search, spot-checked by hand: 2^1=3-1, 2^2=5-1, 2^3=7+1,
    # 2^3=9-1, 2^5=33=3*11-1, 2^6=64=5*13-1
    assert [expected_cycle_size(S) for S in (3, 5, 7, 9, 11, 13)] == [2, 4, 6, 6, 10, 12]
    with pytest.raises(ValueError):
        expected_cycle_size(4)


def test_distinct_degree_count():
    assert distinct_degree_count(clique(4)) == 1
    assert distinct_degree_count(path(4)) == 2
    assert distinct_degree_count(star(5)) == 2


@settings(max_examples=30)
@given(st.integers(4, 9), st.integers(0, 10**6))
def test_alpha_core_members_have_core_degree(n, seed):
    rng = random.Random(seed)
    g = Graph(n, [pq for pq in all_pairs(n) if rng.random() < 0.5])
    for a in (2, 3):
        nodes, core = alpha_core(g, a)
        for u in nodes:
            assert core.degree(u) >= a
