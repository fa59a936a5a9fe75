"""Cell-gadget graphs that run an elementary automaton on the step engine.

Each tape cell is a cell gadget (CG) of four primitive cell gadgets (PCGs)
named A1, A2, B1, B2; a PCG is a node pair whose internal edge encodes one
bit. PCG-to-PCG connections are 4-edge bundles that never change; only the
internal edges are ever scheduled. Engine steps alternate between updating
the A-PCGs (even steps) and the B-PCGs (odd steps), so two engine steps
advance the automaton by one. The tape is closed into a ring (width >= 3)
so every cell has distinct left and right neighbors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .engine import RuleContext, Thresholds, step
from .graph import Graph, NodePair, node_pair
from .rules import rule110_energy

DEFAULT_BETA = 100.0


class GadgetInconsistencyError(ValueError):
    """A cell's four PCGs disagree where the construction requires agreement."""


@dataclass(frozen=True)
class GadgetLayout:
    width: int

    def pcg(self, kind: str, j: int, i: int) -> NodePair:
        """Node pair of PCG A_j(i) or B_j(i); 8 nodes per cell."""
        base = 8 * (i % self.width)
        offset = {"A": 0, "B": 4}[kind] + 2 * (j - 1)
        return (base + offset, base + offset + 1)

    def a(self, j: int, i: int) -> NodePair:
        return self.pcg("A", j, i)

    def b(self, j: int, i: int) -> NodePair:
        return self.pcg("B", j, i)

    def a_pairs(self) -> list[NodePair]:
        return [self.a(j, i) for i in range(self.width) for j in (1, 2)]

    def b_pairs(self) -> list[NodePair]:
        return [self.b(j, i) for i in range(self.width) for j in (1, 2)]


def _bundle(p: NodePair, q: NodePair) -> set[NodePair]:
    """The 4 edges of a PCG-to-PCG connection."""
    return {node_pair(x, y) for x in p for y in q}


def connection_edges(layout: GadgetLayout) -> set[NodePair]:
    edges: set[NodePair] = set()
    for i in range(layout.width):
        for j in (1, 2):
            for k in (1, 2):
                edges |= _bundle(layout.a(j, i), layout.b(k, i))
            edges |= _bundle(layout.a(j, i), layout.a(j, i + 1))
            edges |= _bundle(layout.a(j, i), layout.b(j, i + 1))
    return edges


def build(tape: Sequence[int]) -> tuple[Graph, GadgetLayout]:
    """Gadget graph for a tape; internal PCG edges present where bits are 1."""
    w = len(tape)
    if w < 3:
        raise ValueError("tape width must be >= 3 (ring closure)")
    if any(b not in (0, 1) for b in tape):
        raise ValueError("tape must be binary")
    layout = GadgetLayout(w)
    edges = connection_edges(layout)
    for i, bit in enumerate(tape):
        if bit:
            for pcg in (layout.a(1, i), layout.a(2, i), layout.b(1, i), layout.b(2, i)):
                edges.add(pcg)
    return Graph(8 * w, edges), layout


def half_step_schedule(layout: GadgetLayout):
    """Even engine steps expose the A-PCG pairs, odd steps the B-PCG pairs."""

    def sched(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
        return layout.a_pairs() if t % 2 == 0 else layout.b_pairs()

    return sched


def half_step_schedule_for(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
    """Schedule variant that derives the layout from the graph size."""
    if g.n % 8 != 0:
        raise ValueError("gadget graphs have 8 nodes per cell")
    layout = GadgetLayout(g.n // 8)
    return layout.a_pairs() if t % 2 == 0 else layout.b_pairs()


def decode(g: Graph, layout: GadgetLayout) -> list[int]:
    """Read the tape back out; all four PCGs of a cell must agree."""
    tape = []
    for i in range(layout.width):
        bits = {
            g.has_edge(*pcg)
            for pcg in (layout.a(1, i), layout.a(2, i), layout.b(1, i), layout.b(2, i))
        }
        if len(bits) != 1:
            raise GadgetInconsistencyError(f"cell {i} PCGs disagree")
        tape.append(1 if bits.pop() else 0)
    return tape


def simulate(
    tape: Sequence[int], automaton_steps: int, beta: float = DEFAULT_BETA
) -> list[list[int]]:
    """Run 2T engine steps and decode at every even step; returns T+1 tapes.

    Width 4 is the faithful minimum: on a 3-ring the left and right A-bundles
    of a cell coincide (i+2 = i-1 mod 3), adding a constant 4 to every CE
    count of an A-PCG and breaking the update arithmetic. The static gadget
    (build/decode) is still well formed at width 3.
    """
    if len(tape) < 4:
        raise ValueError("simulation needs tape width >= 4 (3-ring bundles overlap)")
    g, layout = build(tape)
    rule = rule110_energy(beta)
    th = Thresholds(beta, beta)
    sched = half_step_schedule(layout)
    ctx = RuleContext(initial_graph=g)
    tapes = [decode(g, layout)]
    for s in range(2 * automaton_steps):
        g = step(g, rule, th, sched, s, ctx)
        if s % 2 == 1:
            tapes.append(decode(g, layout))
    return tapes
