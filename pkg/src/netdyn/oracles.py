"""Independent reference computations used to validate emergent outputs.

These deliberately use their own breadth-first search rather than the graph
class's cached distances, so the checks do not share code with the engine
path they validate.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph, NodePair, node_pair


class DisconnectedGraphError(ValueError):
    """Raised when a shortest-path oracle is given a disconnected graph."""


def _bfs_layers(g: Graph, s: int, radius: float = float("inf")) -> dict[int, int]:
    layers = {s: 0}
    q = deque([s])
    while q:
        u = q.popleft()
        if layers[u] >= radius:
            continue
        for v in g.neighbors(u):
            if v not in layers:
                layers[v] = layers[u] + 1
                q.append(v)
    return layers


def alpha_core(g: Graph, a: int) -> tuple[set[int], Graph]:
    """Peel nodes of degree < a until a fixed point; returns (nodes, subgraph).

    The complement node set is the (a-1)-crust.
    """
    alive = set(range(g.n))
    deg = {u: g.degree(u) for u in alive}
    changed = True
    while changed:
        changed = False
        for u in list(alive):
            if deg[u] < a:
                alive.discard(u)
                for v in g.neighbors(u):
                    if v in alive:
                        deg[v] -= 1
                changed = True
    edges = {(u, v) for u, v in g.edges if u in alive and v in alive}
    return alive, Graph(g.n, edges)


def shortest_path_edges_from(g: Graph, s: int) -> set[NodePair]:
    """Edges on some shortest path starting at s: BFS layers differ by 1."""
    layers = _bfs_layers(g, s)
    if len(layers) != g.n:
        raise DisconnectedGraphError("shortest-path oracle needs a connected graph")
    return {(u, v) for u, v in g.edges if abs(layers[u] - layers[v]) == 1}


def shortest_path_edges_between(
    g: Graph, s: int, t: int, radius: float = float("inf")
) -> set[NodePair]:
    """Edges on some shortest s-t path: d(s,u) + 1 + d(v,t) = d(s,t).

    With a finite radius, both searches are cut off at that depth from their
    root; edges beyond it are never part of a path shorter than the radius.
    """
    ls = _bfs_layers(g, s, radius)
    lt = _bfs_layers(g, t, radius)
    if radius == float("inf") and len(ls) != g.n:
        raise DisconnectedGraphError("shortest-path oracle needs a connected graph")
    if t not in ls:
        raise DisconnectedGraphError("target unreachable from source")
    d = ls[t]
    out: set[NodePair] = set()
    for u, v in g.edges:
        if u in ls and v in lt and ls[u] + 1 + lt[v] == d:
            out.add((u, v))
        elif v in ls and u in lt and ls[v] + 1 + lt[u] == d:
            out.add((u, v))
    return out


def rule110_direct(tape: Sequence[int], steps: int) -> list[list[int]]:
    """Direct elementary-automaton evolution on a cyclic tape."""
    w = len(tape)
    if w < 3:
        raise ValueError("tape width must be >= 3")
    cur = [int(b) for b in tape]
    if any(b not in (0, 1) for b in cur):
        raise ValueError("tape must be binary")
    out = [list(cur)]
    for _ in range(steps):
        nxt = []
        for i in range(w):
            left, mid, right = cur[(i - 1) % w], cur[i], cur[(i + 1) % w]
            if mid == 0:
                nxt.append(right)
            else:
                nxt.append(0 if left == 1 and right == 1 else 1)
        cur = nxt
        out.append(list(cur))
    return out


def gs_expected_neighbors(S: int, t: int, x: int, y: int) -> frozenset[int]:
    """Closed-form neighbor set of node (x, y) of the torus-grid family at step t.

    Returned as row-major node ids (x * S + y) to match the generator layout.
    """
    if S < 3 or S % 2 == 0:
        raise ValueError("closed form requires odd S >= 3")
    l = t // 2
    off = pow(2, l, S)
    if t % 2 == 0:
        coords = {
            ((x + off) % S, y),
            ((x - off) % S, y),
            (x, (y + off) % S),
            (x, (y - off) % S),
        }
    else:
        coords = {
            ((x + sx * off) % S, (y + sy * off) % S)
            for sx in (1, -1)
            for sy in (1, -1)
        }
    return frozenset(cx * S + cy for cx, cy in coords)


def expected_cycle_size(S: int) -> int:
    """2k for the smallest k > 0 with 2^k = +-1 (mod S), by direct search."""
    if S < 3 or S % 2 == 0:
        raise ValueError("cycle-size formula requires odd S >= 3")
    k = 1
    p = 2 % S
    while p != 1 and p != S - 1:
        k += 1
        p = (p * 2) % S
    return 2 * k


def distinct_degree_count(g: Graph) -> int:
    return len({g.degree(u) for u in range(g.n)})
