"""Graph families and seeded random test graphs.

The torus-grid family uses row-major node ids: node (x, y) -> x * S + y.
Seeded graphs use Python's random.Random (Mersenne Twister), so corpora are
reproducible across platforms.
"""
from __future__ import annotations

import random

from .dynamics import RunConfig
from .engine import RuleContext, Thresholds
from .graph import Graph, NodePair, all_pairs, node_pair


def null(n: int) -> Graph:
    return Graph(n)


def clique(n: int) -> Graph:
    return Graph(n, all_pairs(n))


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        return path(n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Node 0 is the hub; nodes 1..n-1 are leaves."""
    return Graph(n, [(0, i) for i in range(1, n)])


def g_s(S: int) -> Graph:
    """S x S torus grid: (x, y) adjacent to (x±1, y) and (x, y±1) mod S.

    4-regular for S >= 3; duplicate wrapped pairs merge for S <= 2.
    """
    if S < 1:
        raise ValueError("S must be >= 1")
    edges: set[NodePair] = set()
    for x in range(S):
        for y in range(S):
            u = x * S + y
            for nx, ny in ((x + 1) % S, y), (x, (y + 1) % S):
                v = nx * S + ny
                if u != v:
                    edges.add(node_pair(u, v))
    return Graph(S * S, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic per seed."""
    if not 0 <= p <= 1:
        raise ValueError("p must be a probability")
    rng = random.Random(seed)
    return Graph(n, [pq for pq in all_pairs(n) if rng.random() < p])


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """First connected G(n, p) sample at or after the given seed."""
    for offset in range(10_000):
        g = random_graph(n, p, seed + offset)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected sample found for n={n}, p={p}")


def random_long_path_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Path 0..n-1 plus short chords; keeps end-to-end distance large."""
    rng = random.Random(seed)
    edges = {(i, i + 1) for i in range(n - 1)}
    for _ in range(extra_edges):
        i = rng.randrange(0, n - 2)
        j = min(n - 1, i + rng.choice((2, 2, 3)))
        if i != j:
            edges.add(node_pair(i, j))
    return Graph(n, edges)


def k9_vs_g3_instances() -> tuple[RunConfig, RunConfig]:
    """Two runs differing only in the step-0 interaction set.

    Energy: common neighbors when both endpoint degrees are 4, else 0.
    Instance 1 updates all pairs every step and collapses to the null graph;
    instance 2 shields the torus-grid edges at step 0, landing on the grid,
    and never converges.
    """
    from .graph import common_neighbor_set

    grid_edges = g_s(3).edges

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        u, v = p
        if g.degree(u) == 4 and g.degree(v) == 4:
            return len(common_neighbor_set(g, p))
        return 0

    def sched_all(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
        return all_pairs(g.n)

    def sched_shielded(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
        if t == 0:
            return [pq for pq in all_pairs(g.n) if pq not in grid_edges]
        return all_pairs(g.n)

    th = Thresholds(2, 2)
    g0 = clique(9)
    first = RunConfig(energy, th, sched_all, g0, record_trajectory=True)
    second = RunConfig(energy, th, sched_shielded, g0, record_trajectory=True)
    return first, second


GENERATORS = {
    "null": null,
    "clique": clique,
    "path": path,
    "cycle": cycle,
    "star": star,
    "gs": g_s,
}


def from_spec(spec: str) -> Graph:
    """Build a graph from a one-line spec like `path:10` or `er:20,0.3,42`."""
    name, _, argstr = spec.partition(":")
    args = argstr.split(",") if argstr else []
    if name == "er":
        if len(args) != 3:
            raise ValueError("er spec needs n,p,seed")
        return random_graph(int(args[0]), float(args[1]), int(args[2]))
    if name in GENERATORS:
        if len(args) != 1:
            raise ValueError(f"{name} spec needs one integer parameter")
        return GENERATORS[name](int(args[0]))
    raise ValueError(f"unknown generator {name!r}")
