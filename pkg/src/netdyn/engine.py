"""Synchronous one-step update: per-pair energies against two thresholds.

Each eligible pair's energy is evaluated on the frozen input graph; below
the lower threshold the edge is deleted, at or above the upper threshold it
is created, in between its status is preserved. Pairs outside the step's
interaction set are untouched.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph import Graph, NodePair, node_pair

Role = str  # "source" | "target" | "plain"


@dataclass(frozen=True)
class Thresholds:
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if self.alpha > self.beta:
            raise ValueError(f"alpha={self.alpha} must be <= beta={self.beta}")


@dataclass(frozen=True)
class RuleContext:
    """Time-0 data a rule may consult: the initial graph and named nodes."""

    initial_graph: Graph | None = None
    source: int | None = None
    target: int | None = None
    extra: dict = field(default_factory=dict, compare=False)


# Energy of a pair at step t, read off the frozen graph g.
EnergyRule = Callable[[NodePair, Graph, int, RuleContext], float]
# Pairs eligible for update at step t.
InteractionSchedule = Callable[[int, Graph, RuleContext], Iterable[NodePair]]


def step(
    g: Graph,
    rule: EnergyRule,
    th: Thresholds,
    sched: InteractionSchedule,
    t: int,
    ctx: RuleContext,
) -> Graph:
    """Apply one fully synchronous update; each unordered pair decided once."""
    pairs = {node_pair(u, v) for u, v in sched(t, g, ctx)}
    edges = set(g.edges)
    for p in pairs:
        e = rule(p, g, t, ctx)
        if e < th.alpha:
            edges.discard(p)
        elif e >= th.beta:
            edges.add(p)
    return Graph(g.n, edges)
