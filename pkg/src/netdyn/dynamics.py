"""Trajectory runner: fixed points, exact limit cycles, step caps."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from .engine import EnergyRule, InteractionSchedule, RuleContext, Thresholds, step
from .graph import Graph, write_edge_list

CONVERGED = "converged"
CYCLIC = "cyclic"
CAPPED = "capped"


def default_step_cap(n: int) -> int:
    # comfortably above every proven bound for the convergent rule families
    return 10 * n * n + 100


@dataclass
class RunConfig:
    rule: EnergyRule
    thresholds: Thresholds
    schedule: InteractionSchedule
    initial_graph: Graph
    context: RuleContext = field(default_factory=RuleContext)
    step_cap: int | None = None
    record_trajectory: bool = False

    def __post_init__(self) -> None:
        if self.step_cap is None:
            self.step_cap = default_step_cap(self.initial_graph.n)
        if self.step_cap < 1:
            raise ValueError("step cap must be >= 1")
        if self.context.initial_graph is None:
            self.context = RuleContext(
                initial_graph=self.initial_graph,
                source=self.context.source,
                target=self.context.target,
                extra=self.context.extra,
            )


@dataclass(frozen=True)
class RunOutcome:
    kind: str  # CONVERGED | CYCLIC | CAPPED
    steps_executed: int
    converge_time: int | None = None
    cycle_start: int | None = None
    cycle_length: int | None = None


Trajectory = list[Graph]


def canonical_key(g: Graph) -> bytes:
    """Injective encoding of (n, sorted edge list); labeled equality only."""
    body = " ".join(f"{u},{v}" for u, v in sorted(g.edges))
    return f"{g.n};{body}".encode("ascii")


def run(cfg: RunConfig) -> tuple[RunOutcome, Trajectory | None]:
    """Iterate the update until fixed point, repeat, or cap.

    Convergence is the first t with G(t) = G(t+1). A repeat of an earlier
    graph (exact edge-set equality, confirmed behind the key map) reports
    the latest prior occurrence, which makes the cycle length minimal.
    """
    g = cfg.initial_graph
    seen: dict[bytes, tuple[int, Graph]] = {canonical_key(g): (0, g)}
    traj: Trajectory | None = [g] if cfg.record_trajectory else None
    t = 0
    assert cfg.step_cap is not None
    while t < cfg.step_cap:
        g_next = step(g, cfg.rule, cfg.thresholds, cfg.schedule, t, cfg.context)
        if g_next == g:
            return RunOutcome(CONVERGED, steps_executed=t + 1, converge_time=t), traj
        t += 1
        if traj is not None:
            traj.append(g_next)
        key = canonical_key(g_next)
        hit = seen.get(key)
        if hit is not None and hit[1] == g_next:
            # Convergence at the same t wins over the repeat: time-dependent
            # rules may revisit an earlier graph and still be at a fixed point.
            g_after = step(g_next, cfg.rule, cfg.thresholds, cfg.schedule, t, cfg.context)
            if g_after == g_next:
                return (
                    RunOutcome(CONVERGED, steps_executed=t + 1, converge_time=t),
                    traj,
                )
            t_prev = hit[0]
            return (
                RunOutcome(
                    CYCLIC,
                    steps_executed=t,
                    cycle_start=t_prev,
                    cycle_length=t - t_prev,
                ),
                traj,
            )
        seen[key] = (t, g_next)
        g = g_next
    return RunOutcome(CAPPED, steps_executed=t), traj


def verify_cycle(cfg: RunConfig, traj: Trajectory, outcome: RunOutcome) -> bool:
    """Replay cycle_length steps from G(cycle_start) and compare."""
    if outcome.kind != CYCLIC or outcome.cycle_start is None:
        raise ValueError("verify_cycle requires a cyclic outcome with a trajectory")
    assert outcome.cycle_length is not None
    g = traj[outcome.cycle_start]
    for t in range(outcome.cycle_start, outcome.cycle_start + outcome.cycle_length):
        g = step(g, cfg.rule, cfg.thresholds, cfg.schedule, t, cfg.context)
    return g == traj[outcome.cycle_start]


def jaccard_distance(a: Graph, b: Graph) -> float:
    """1 - |Ea ∩ Eb| / |Ea ∪ Eb|; 0.0 for two empty edge sets."""
    union = a.edges | b.edges
    if not union:
        return 0.0
    return 1.0 - len(a.edges & b.edges) / len(union)


def dump_trajectory(traj: Trajectory, directory: str) -> None:
    """One edge-list file per step, named step_<t>.edges."""
    os.makedirs(directory, exist_ok=True)
    for t, g in enumerate(traj):
        with open(os.path.join(directory, f"step_{t}.edges"), "w") as f:
            write_edge_list(g, f)
