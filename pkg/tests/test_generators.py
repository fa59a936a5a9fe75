import pytest

from netdyn.generators import (
    clique,
    cycle,
    from_spec,
    g_s,
    k9_vs_g3_instances,
    null,
    path,
    random_connected_graph,
    random_graph,
    random_long_path_graph,
    star,
)
from netdyn.graph import all_pairs


def test_basic_families():
    assert null(4).num_edges() == 0
    assert clique(5).edges == frozenset(all_pairs(5))
    assert path(4).edges == frozenset({(0, 1), (1, 2), (2, 3)})
    assert cycle(4).edges == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
    assert star(4).edges == frozenset({(0, 1), (0, 2), (0, 3)})


def test_gs_is_4_regular_torus():
    for S in (3, 4, 5, 7):
        g = g_s(S)
        assert g.n == S * S
        assert all(g.degree(u) == 4 for u in range(g.n))
    # node (x, y) -> x * S + y; (0,0) touches its four wrapped axis neighbors
    g = g_s(5)
    assert g.neighbors(0) == frozenset({1, 4, 5, 20})


def test_gs_validates():
    with pytest.raises(ValueError):
        g_s(0)


def test_random_graph_deterministic():
    a = random_graph(15, 0.3, 7)
    b = random_graph(15, 0.3, 7)
    assert a == b
    assert a != random_graph(15, 0.3, 8)
    with pytest.raises(ValueError):
        random_graph(5, 1.5, 0)


def test_random_connected_graph():
    for seed in range(10):
        assert random_connected_graph(12, 0.2, seed).is_connected()


def test_random_long_path_graph_keeps_endpoints_far():
    g = random_long_path_graph(12, 3, 4)
    assert g.is_connected()
    assert g.distances_from(0)[11] >= 12 // 3


def test_k9_instances_share_start():
    first, second = k9_vs_g3_instances()
    assert first.initial_graph == clique(9) == second.initial_graph
    # the only difference is the step-0 interaction set
    ctx = first.context
    s1 = set(first.schedule(0, clique(9), ctx))
    s2 = set(second.schedule(0, clique(9), second.context))
    assert s2 == s1 - g_s(3).edges
    assert set(first.schedule(1, clique(9), ctx)) == set(
        second.schedule(1, clique(9), second.context)
    )


def test_from_spec():
    assert from_spec("path:6") == path(6)
    assert from_spec("gs:5") == g_s(5)
    assert from_spec("er:10,0.3,42") == random_graph(10, 0.3, 42)
    with pytest.raises(ValueError):
        from_spec("mystery:3")
    with pytest.raises(ValueError):
        from_spec("er:10")
