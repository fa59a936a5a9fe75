"""Undirected simple graphs over a fixed node set 0..n-1.

Graphs are immutable once constructed, which lets per-graph quantities
(adjacency, BFS distances) be computed lazily and cached on the instance.
"""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, TextIO

Unreachable = math.inf

NodePair = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when an edge-list file violates the format."""


def node_pair(u: int, v: int) -> NodePair:
    """Canonical unordered pair: (min, max), rejecting self-pairs."""
    if u == v:
        raise ValueError(f"self-pair ({u},{v}) is not a valid node pair")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph: node count plus a frozen canonical edge set."""

    __slots__ = ("n", "edges", "_adj", "_dist")

    def __init__(self, n: int, edges: Iterable[NodePair] = ()):
        if n < 1:
            raise ValueError("graph needs at least one node")
        es = frozenset(node_pair(u, v) for u, v in edges)
        for u, v in es:
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        self.n = n
        self.edges = es
        self._adj: list[frozenset[int]] | None = None
        self._dist: dict[int, tuple[float, ...]] = {}

    @property
    def adj(self) -> list[frozenset[int]]:
        if self._adj is None:
            sets: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.edges:
                sets[u].add(v)
                sets[v].add(u)
            self._adj = [frozenset(s) for s in sets]
        return self._adj

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return node_pair(u, v) in self.edges

    def num_edges(self) -> int:
        return len(self.edges)

    def distances_from(self, s: int) -> tuple[float, ...]:
        """BFS hop distances from s; Unreachable (inf) for other components."""
        cached = self._dist.get(s)
        if cached is not None:
            return cached
        dist = [Unreachable] * self.n
        dist[s] = 0
        q = deque([s])
        adj = self.adj
        while q:
            u = q.popleft()
            du = dist[u] + 1
            for v in adj[u]:
                if dist[v] == Unreachable:
                    dist[v] = du
                    q.append(v)
        out = tuple(dist)
        self._dist[s] = out
        return out

    def is_connected(self) -> bool:
        return Unreachable not in self.distances_from(0)

    def complement(self) -> "Graph":
        edges = {(u, v) for u in range(self.n) for v in range(u + 1, self.n)}
        return Graph(self.n, edges - self.edges)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def degree(g: Graph, u: int) -> int:
    return g.degree(u)


def common_neighbors(g: Graph, p: NodePair) -> int:
    u, v = p
    return len(g.neighbors(u) & g.neighbors(v))


def common_neighbor_set(g: Graph, p: NodePair) -> frozenset[int]:
    u, v = p
    return g.neighbors(u) & g.neighbors(v)


def edges_among(g: Graph, s: Iterable[int]) -> int:
    """Number of edges with both endpoints in s."""
    nodes = sorted(set(s))
    count = 0
    for i, u in enumerate(nodes):
        nu = g.neighbors(u)
        for v in nodes[i + 1 :]:
            if v in nu:
                count += 1
    return count


def distance(g: Graph, u: int, v: int) -> float:
    """Hop distance; Unreachable if u and v are in different components."""
    return g.distances_from(u)[v]


def in_triangle(g: Graph, u: int) -> bool:
    """True iff u has two adjacent neighbors."""
    nbrs = sorted(g.neighbors(u))
    for i, x in enumerate(nbrs):
        nx = g.neighbors(x)
        for y in nbrs[i + 1 :]:
            if y in nx:
                return True
    return False


def all_pairs(n: int) -> list[NodePair]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def write_edge_list(g: Graph, f: TextIO) -> None:
    f.write(f"{g.n} {len(g.edges)}\n")
    for u, v in sorted(g.edges):
        f.write(f"{u} {v}\n")


def read_edge_list(f: TextIO) -> Graph:
    """Parse the `n m` / `u v` edge-list format with strict validation."""
    header = f.readline()
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"bad header line: {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header line: {header!r}") from exc
    if n < 1 or m < 0:
        raise GraphFormatError(f"bad header values: n={n} m={m}")
    edges: set[NodePair] = set()
    for i in range(m):
        line = f.readline()
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {i + 2}: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {i + 2}: {line!r}") from exc
        if u == v:
            raise GraphFormatError(f"self-loop ({u},{v}) at line {i + 2}")
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u},{v}) out of range at line {i + 2}")
        if (u, v) in edges:
            raise GraphFormatError(f"duplicate edge ({u},{v}) at line {i + 2}")
        edges.add((u, v))
    return Graph(n, edges)
