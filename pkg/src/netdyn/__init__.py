"""Deterministic simulator for threshold-driven dynamic-topology networks."""

from .dynamics import (
    CAPPED,
    CONVERGED,
    CYCLIC,
    RunConfig,
    RunOutcome,
    canonical_key,
    run,
    verify_cycle,
)
from .engine import EnergyRule, InteractionSchedule, RuleContext, Thresholds, step
from .graph import Graph, GraphFormatError, Unreachable, node_pair

__all__ = [
    "CAPPED",
    "CONVERGED",
    "CYCLIC",
    "EnergyRule",
    "Graph",
    "GraphFormatError",
    "InteractionSchedule",
    "RuleContext",
    "RunConfig",
    "RunOutcome",
    "Thresholds",
    "Unreachable",
    "canonical_key",
    "node_pair",
    "run",
    "step",
    "verify_cycle",
]
