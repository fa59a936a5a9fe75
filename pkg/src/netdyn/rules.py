"""Built-in energy rules and their interaction schedules.

Every rule is a pure function of (pair, frozen graph, step index, context).
Piecewise energies follow strict first-match branch order, with symmetric
closure: a branch fires if its condition holds for (u,v) or (v,u).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .engine import EnergyRule, InteractionSchedule, RuleContext, Thresholds
from .graph import (
    Graph,
    NodePair,
    Unreachable,
    all_pairs,
    common_neighbor_set,
    edges_among,
    in_triangle,
    node_pair,
)
from .oracles import shortest_path_edges_between


# ---------------------------------------------------------------------------
# Proper functions (symmetric, coordinate-wise non-decreasing on naturals)

@dataclass(frozen=True)
class ProperFunction:
    name: str
    fn: Callable[[float, float], float]

    def __call__(self, x: float, y: float) -> float:
        return self.fn(x, y)

    @staticmethod
    def minimum() -> "ProperFunction":
        return ProperFunction("min", min)

    @staticmethod
    def maximum() -> "ProperFunction":
        return ProperFunction("max", max)

    @staticmethod
    def total() -> "ProperFunction":
        return ProperFunction("sum", lambda x, y: x + y)

    @staticmethod
    def product() -> "ProperFunction":
        return ProperFunction("product", lambda x, y: x * y)

    @staticmethod
    def weighted_sum(w: float) -> "ProperFunction":
        # equal weights on both coordinates keep the function symmetric
        if w < 0:
            raise ValueError("weight must be >= 0")
        return ProperFunction(f"weighted_sum({w})", lambda x, y: w * (x + y))

    @staticmethod
    def from_table(table: dict[tuple[int, int], float], domain: int) -> "ProperFunction":
        """Tabulated f on [0, domain-1]^2, validated exhaustively."""
        for x in range(domain):
            for y in range(domain):
                if (x, y) not in table:
                    raise ValueError(f"table missing entry ({x},{y})")
                if table[(x, y)] != table[(y, x)]:
                    raise ValueError(f"table not symmetric at ({x},{y})")
                if x > 0 and table[(x, y)] < table[(x - 1, y)]:
                    raise ValueError(f"table decreasing at ({x},{y})")
                if y > 0 and table[(x, y)] < table[(x, y - 1)]:
                    raise ValueError(f"table decreasing at ({x},{y})")
        frozen = dict(table)
        return ProperFunction("table", lambda x, y: frozen[(int(x), int(y))])


PROPER_BUILTINS: dict[str, Callable[[], ProperFunction]] = {
    "min": ProperFunction.minimum,
    "max": ProperFunction.maximum,
    "sum": ProperFunction.total,
    "product": ProperFunction.product,
}


# ---------------------------------------------------------------------------
# Degree-like functions (monotone under neighborhood inclusion)

@dataclass(frozen=True)
class DegreeLikeFunction:
    name: str
    fn: Callable[[int, Graph], float]

    def __call__(self, u: int, g: Graph) -> float:
        return self.fn(u, g)

    @staticmethod
    def degree() -> "DegreeLikeFunction":
        return DegreeLikeFunction("degree", lambda u, g: g.degree(u))

    @staticmethod
    def weighted_neighbor_sum(weights: list[float]) -> "DegreeLikeFunction":
        if any(w < 0 for w in weights):
            raise ValueError("importance weights must be >= 0")
        return DegreeLikeFunction(
            "weighted_neighbor_sum",
            lambda u, g: sum(weights[v] for v in g.neighbors(u)),
        )

    @staticmethod
    def confidence(niceness: list[float]) -> "DegreeLikeFunction":
        if any(x < 0 for x in niceness):
            raise ValueError("niceness must be >= 0")
        return DegreeLikeFunction(
            "confidence",
            lambda u, g: niceness[u] * sum(niceness[v] for v in g.neighbors(u)),
        )


# ---------------------------------------------------------------------------
# Schedules

def all_pairs_schedule(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
    return all_pairs(g.n)


def distance_le2_pairs(g: Graph) -> set[NodePair]:
    """Pairs at hop distance 1 or 2 in g."""
    pairs: set[NodePair] = set(g.edges)
    for w in range(g.n):
        nbrs = sorted(g.neighbors(w))
        for i, u in enumerate(nbrs):
            for v in nbrs[i + 1 :]:
                pairs.add((u, v))
    return pairs


def distance_le2_schedule(t: int, g: Graph, ctx: RuleContext) -> set[NodePair]:
    return distance_le2_pairs(g)


def seeded_random_schedule(seed: int, p: float = 0.5) -> InteractionSchedule:
    """Deterministic per (seed, step): each pair included with probability p."""

    def sched(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
        rng = random.Random(seed * 1_000_003 + t)
        return [pq for pq in all_pairs(g.n) if rng.random() < p]

    return sched


# ---------------------------------------------------------------------------
# Degree-based rules

def min_degree_rule() -> tuple[EnergyRule, InteractionSchedule]:
    """Energy = min of endpoint degrees; all pairs eligible."""

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        u, v = p
        return min(g.degree(u), g.degree(v))

    return energy, all_pairs_schedule


def proper_degree_rule(f: ProperFunction) -> tuple[EnergyRule, InteractionSchedule]:
    """Energy = f(deg u, deg v) for a proper f; all pairs eligible."""

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        u, v = p
        return f(g.degree(u), g.degree(v))

    return energy, all_pairs_schedule


def degree_like_rule(f: ProperFunction, gl: DegreeLikeFunction) -> EnergyRule:
    """Energy = f(gl(u), gl(v)); pair with any schedule."""

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        u, v = p
        return f(gl(u, g), gl(v, g))

    return energy


# ---------------------------------------------------------------------------
# Social dynamics

@dataclass(frozen=True)
class SocialParams:
    niceness: list[float]
    extrovertedness: list[float]
    enemies: frozenset[NodePair] = field(default_factory=frozenset)
    gamma: int = 10

    def __post_init__(self) -> None:
        if len(self.niceness) != len(self.extrovertedness):
            raise ValueError("niceness and extrovertedness must cover the same nodes")
        if any(x < 0 for x in self.niceness) or any(x < 0 for x in self.extrovertedness):
            raise ValueError("niceness and extrovertedness must be >= 0")


def parse_social_params(text: str) -> SocialParams:
    """Line-oriented records: niceness/extro value lists, enemy pairs, gamma."""
    niceness: list[float] = []
    extro: list[float] = []
    enemies: set[NodePair] = set()
    gamma = 10
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *rest = line.split()
        if kind == "niceness":
            niceness = [float(x) for x in rest]
        elif kind == "extro":
            extro = [float(x) for x in rest]
        elif kind == "enemy":
            if len(rest) != 2:
                raise ValueError(f"line {lineno}: enemy record needs two node ids")
            enemies.add(node_pair(int(rest[0]), int(rest[1])))
        elif kind == "gamma":
            gamma = int(rest[0])
        else:
            raise ValueError(f"line {lineno}: unknown record {kind!r}")
    return SocialParams(niceness, extro, frozenset(enemies), gamma)


def social_rule(params: SocialParams) -> tuple[EnergyRule, InteractionSchedule]:
    """Total-confidence energy with an extrovertedness-driven schedule."""
    conf = DegreeLikeFunction.confidence(params.niceness)

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        u, v = p
        return conf(u, g) + conf(v, g)

    def sched(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
        out = []
        for u, v in all_pairs(g.n):
            if (u, v) in params.enemies:
                continue
            if (u, v) in g.edges:
                if len(g.neighbors(u) & g.neighbors(v)) <= params.gamma:
                    out.append((u, v))
            else:
                d = g.distances_from(u)[v]
                if 1 < d <= params.extrovertedness[u] + params.extrovertedness[v]:
                    out.append((u, v))
        return out

    return energy, sched


# ---------------------------------------------------------------------------
# Common-neighborhood rules

def common_neighbors_rule() -> tuple[EnergyRule, InteractionSchedule]:
    """Energy = |N(u) ∩ N(v)|; pairs at distance <= 2 eligible."""

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        return len(common_neighbor_set(g, p))

    return energy, distance_le2_schedule


def zhang_rule() -> tuple[EnergyRule, InteractionSchedule]:
    """Common neighbors + edge indicator + edges among common neighbors."""

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        cn = common_neighbor_set(g, p)
        return len(cn) + (1 if p in g.edges else 0) + edges_among(g, cn)

    return energy, distance_le2_schedule


# ---------------------------------------------------------------------------
# Shortest-path rules

def _require_source(ctx: RuleContext) -> int:
    if ctx.source is None:
        raise ValueError("rule requires a source node in the context")
    return ctx.source


def _require_target(ctx: RuleContext) -> int:
    if ctx.target is None:
        raise ValueError("rule requires a target node in the context")
    return ctx.target


def ssad_rule(th: Thresholds) -> tuple[EnergyRule, InteractionSchedule]:
    """Single-source all-destination shortest paths (BFS-like emergence)."""
    if not (0 < th.alpha < th.beta):
        raise ValueError("ssad needs 0 < alpha < beta")
    a, b = th.alpha, th.beta

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        s = _require_source(ctx)
        d = g.distances_from(s)
        u, v = p
        if t == 0 and d[u] == 1 and d[v] == 1:
            return 0
        if t == 0 and ((u == s and d[v] == 2) or (v == s and d[u] == 2)):
            return b
        if d[u] == 2 and d[v] == 2:
            return 0
        if ((u == s and d[v] == 1) or (v == s and d[u] == 1)) and 2 not in d:
            return 0
        if (
            t > 0
            and ((u == s and d[v] == 2) or (v == s and d[u] == 2))
            and in_triangle(g, s)
        ):
            return b
        return a

    def sched(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
        s = _require_source(ctx)
        assert ctx.initial_graph is not None
        frozen = {node_pair(s, v) for v in ctx.initial_graph.neighbors(s)}
        return [pq for pq in all_pairs(g.n) if pq not in frozen]

    return energy, sched


def sssd_rule(th: Thresholds) -> tuple[EnergyRule, InteractionSchedule]:
    """Single-source single-destination shortest paths.

    The main energy dispatches between four sub-functions; a sub-function is
    "specified" for a pair when one of its branches matches in either
    orientation.
    """
    if not (0 < th.alpha < th.beta):
        raise ValueError("sssd needs 0 < alpha < beta")
    a, b = th.alpha, th.beta

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        s = _require_source(ctx)
        tg = _require_target(ctx)
        assert ctx.initial_graph is not None
        d0 = ctx.initial_graph.distances_from(s)
        u, v = p
        if d0[u] > 15 or d0[v] > 15:
            return a
        ds = g.distances_from(s)
        dt = g.distances_from(tg)
        dd = ds[tg]
        s_tri = in_triangle(g, s)

        def e_zero() -> float:
            if dd <= 6 and (
                (u in (s, tg) and ds[v] == dd + 2)
                or (v in (s, tg) and ds[u] == dd + 2)
            ):
                return b
            if dd <= 6 and {u, v} == {s, tg}:
                return b
            if dd <= 6 and (ds[u] <= dd + 1 or ds[v] <= dd + 1):
                return 0
            if ds[u] == 1 and ds[v] == 1:
                return 0
            if dt[u] == 1 and dt[v] == 1:
                return 0
            return a

        def e_drop() -> float | None:
            if (ds[u] == 1 and dt[u] == 1) or (ds[v] == 1 and dt[v] == 1):
                return 0

            def cond(x: int, y: int) -> bool:
                return (
                    x in (s, tg)
                    and y not in (s, tg)
                    and any(ds[w] == 1 and dt[w] == 1 for w in g.neighbors(y))
                )

            if cond(u, v) or cond(v, u):
                return b
            return None

        def e_stop() -> float:
            if {u, v} == {s, tg}:
                return b
            # Shortest-path membership never shields a target edge: at the
            # stop step every target edge drops except the schedule-frozen
            # initial ones (the marked-pair clause cannot match the target
            # either, its self-distance being 0).
            on_sp = tg not in (u, v) and (
                ds[u] + 1 + dt[v] == dd or ds[v] + 1 + dt[u] == dd
            )
            if (dt[u] == 1 and dt[v] == 1) or on_sp:
                return a
            return 0

        def e_bfs() -> float | None:
            # The layer-cleanup branches (1) and (4) disconnect anonymous
            # frontier nodes; the named nodes are handled by the explicit
            # source/target branches (the target always has ds = D, so
            # including it here would starve the marking branch (6)).
            even_or_far = t % 2 == 0 or dd > 4
            anon_u = u not in (s, tg)
            anon_v = v not in (s, tg)
            if even_or_far and anon_u and anon_v and ds[u] == ds[v] and ds[u] in (2, 3):
                return 0
            if t % 2 == 1 and (u == s or v == s) and dd in (3, 4):
                return 0

            def near_target(x: int, y: int) -> bool:
                return x == tg and dt[y] == 1 and (ds[y] < dd or in_triangle(g, tg))

            if t % 2 == 1 and dd in (3, 4) and (near_target(u, v) or near_target(v, u)):
                return a
            # A node on an original shortest path can sit at distance D of
            # the current graph once the target carries mark edges; the
            # frontier drop must spare it or a wanted edge is lost for good
            # (creation only ever touches source or target edges).
            d0t = ctx.initial_graph.distances_from(tg)
            dd0 = d0[tg]

            def frontier(x: int) -> bool:
                return (
                    x not in (s, tg)
                    and d0[x] + d0t[x] != dd0
                    and ds[x] in (dd, dd + 1)
                )

            if t % 2 == 1 and dd in (3, 4) and (frontier(u) or frontier(v)):
                return 0
            if even_or_far and ((u == s and ds[v] == 2) or (v == s and ds[u] == 2)):
                return b

            def back_fill(x: int, y: int) -> bool:
                return x == tg and ds[y] == dd - 2 and dt[y] == 2

            if t % 2 == 1 and dd in (3, 4) and (back_fill(u, v) or back_fill(v, u)):
                return b
            if t % 2 == 1 and dd in (3, 4) and (
                (u in (s, tg) and ds[v] == dd + 2)
                or (v in (s, tg) and ds[u] == dd + 2)
            ):
                return b
            return None

        if t == 0 and (
            dd <= 6
            or s_tri
            or ((dt[u] == 1 or dt[v] == 1) and in_triangle(g, tg))
        ):
            return e_zero()
        drop = e_drop()
        if drop is not None:
            return drop
        if dd == 5 and not s_tri:
            return e_stop()
        if dd > 2 and (s_tri or dd > 5):
            bfs = e_bfs()
            if bfs is not None:
                return bfs
        return a

    def sched(t: int, g: Graph, ctx: RuleContext) -> list[NodePair]:
        s = _require_source(ctx)
        tg = _require_target(ctx)
        g0 = ctx.initial_graph
        assert g0 is not None
        if g0.distances_from(s)[tg] <= 6:
            excluded = shortest_path_edges_between(g0, s, tg, radius=7)
        elif t % 2 == 0:
            excluded = {node_pair(tg, v) for v in g0.neighbors(tg)}
        else:
            excluded = {node_pair(s, v) for v in g0.neighbors(s)}
        return [pq for pq in all_pairs(g.n) if pq not in excluded]

    return energy, sched


# ---------------------------------------------------------------------------
# Elementary-automaton gadget rule

def rule110_energy(beta: float = 100.0) -> EnergyRule:
    """Piecewise energy on common-neighbor counts driving the cell gadgets."""

    def energy(p: NodePair, g: Graph, t: int, ctx: RuleContext) -> float:
        cn = common_neighbor_set(g, p)
        ce = edges_among(g, cn)
        if len(cn) == 10:
            if p in g.edges:
                return beta + 12 - ce
            return ce + beta - 10
        if len(cn) == 6:
            return ce + beta - 6
        return beta - 1

    return energy


# ---------------------------------------------------------------------------
# Rule selection by string id

def parse_rule_spec(
    spec: str,
    thresholds: Thresholds,
    n: int,
    seed: int = 0,
) -> tuple[EnergyRule, InteractionSchedule]:
    """Resolve a rule id string like `proper_degree:f=sum` to callables."""
    name, _, argstr = spec.partition(":")
    args: dict[str, str] = {}
    if name not in ("social",) and argstr:
        for item in argstr.split(","):
            k, _, v = item.partition("=")
            args[k] = v
    if name == "min_degree":
        return min_degree_rule()
    if name == "proper_degree":
        f = PROPER_BUILTINS[args.get("f", "sum")]()
        return proper_degree_rule(f)
    if name == "degree_like":
        f = PROPER_BUILTINS[args.get("f", "sum")]()
        gname = args.get("g", "degree")
        if gname == "degree":
            gl = DegreeLikeFunction.degree()
        elif gname == "weighted":
            gl = DegreeLikeFunction.weighted_neighbor_sum([1.0] * n)
        elif gname == "confidence":
            gl = DegreeLikeFunction.confidence([1.0] * n)
        else:
            raise ValueError(f"unknown degree-like function {gname!r}")
        sname = args.get("sched", "all")
        if sname == "all":
            sched: InteractionSchedule = all_pairs_schedule
        elif sname == "dist2":
            sched = distance_le2_schedule
        elif sname == "random":
            sched = seeded_random_schedule(seed)
        else:
            raise ValueError(f"unknown schedule {sname!r}")
        return degree_like_rule(f, gl), sched
    if name == "social":
        with open(argstr) as fh:
            params = parse_social_params(fh.read())
        return social_rule(params)
    if name == "common_neighbors":
        return common_neighbors_rule()
    if name == "zhang":
        return zhang_rule()
    if name == "ssad":
        return ssad_rule(thresholds)
    if name == "sssd":
        return sssd_rule(thresholds)
    if name == "rule110":
        from .rule110 import half_step_schedule_for

        return rule110_energy(thresholds.beta), half_step_schedule_for
    raise ValueError(f"unknown rule id {name!r}")
