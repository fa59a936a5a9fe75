"""Command-line entry point for runs, verification sweeps, and exports.

Exit codes: 0 success / all checks pass, 1 runtime failure, 2 usage error,
3 verification failure, 4 step cap exhausted.
"""
from __future__ import annotations

import argparse
import random
import sys
from typing import Iterable, Sequence

from . import oracles, rule110
from .dynamics import (
    CAPPED,
    CONVERGED,
    CYCLIC,
    RunConfig,
    RunOutcome,
    Trajectory,
    dump_trajectory,
    jaccard_distance,
    run,
)
from .engine import RuleContext, Thresholds
from .generators import (
    from_spec,
    g_s,
    k9_vs_g3_instances,
    random_connected_graph,
    random_long_path_graph,
)
from .graph import Graph, GraphFormatError, node_pair, read_edge_list, write_edge_list
from .rules import (
    common_neighbors_rule,
    min_degree_rule,
    parse_rule_spec,
    ssad_rule,
    sssd_rule,
    zhang_rule,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_CAPPED = 4


def _load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "gen", None):
        return from_spec(args.gen)
    with open(args.graph) as fh:
        return read_edge_list(fh)


def _report(outcome: RunOutcome, traj: Trajectory | None, trace: bool) -> None:
    print(f"outcome={outcome.kind}")
    if outcome.converge_time is not None:
        print(f"converge_time={outcome.converge_time}")
    if outcome.cycle_start is not None:
        print(f"cycle_start={outcome.cycle_start}")
        print(f"cycle_length={outcome.cycle_length}")
    print(f"steps_executed={outcome.steps_executed}")
    if trace and traj is not None:
        for t, g in enumerate(traj):
            print(f"edges_{t}={g.num_edges()}")
            if t > 0:
                print(f"jaccard_{t}={jaccard_distance(traj[t - 1], g):.6f}")


def cmd_run(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    th = Thresholds(args.alpha, args.beta)
    rule, sched = parse_rule_spec(args.rule, th, g.n, seed=args.seed)
    ctx = RuleContext(initial_graph=g, source=args.source, target=args.target)
    cfg = RunConfig(
        rule,
        th,
        sched,
        g,
        context=ctx,
        step_cap=args.cap,
        record_trajectory=bool(args.dump or args.trace),
    )
    outcome, traj = run(cfg)
    _report(outcome, traj, args.trace)
    if args.dump and traj is not None:
        dump_trajectory(traj, args.dump)
    return EXIT_CAPPED if outcome.kind == CAPPED else EXIT_OK


def cmd_shortest(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if not g.is_connected():
        print("error: input graph is disconnected", file=sys.stderr)
        return EXIT_FAILURE
    th = Thresholds(args.alpha, args.beta)
    if args.target is None:
        rule, sched = ssad_rule(th)
    else:
        rule, sched = sssd_rule(th)
    ctx = RuleContext(initial_graph=g, source=args.source, target=args.target)
    cfg = RunConfig(rule, th, sched, g, context=ctx, step_cap=args.cap, record_trajectory=True)
    outcome, traj = run(cfg)
    if outcome.kind != CONVERGED:
        print(f"error: run did not converge (outcome={outcome.kind})", file=sys.stderr)
        return EXIT_CAPPED
    assert traj is not None
    final = traj[-1]
    if args.out:
        with open(args.out, "w") as fh:
            write_edge_list(final, fh)
    else:
        write_edge_list(final, sys.stdout)
    return EXIT_OK


def cmd_rule110(args: argparse.Namespace) -> int:
    tape = [int(c) for c in args.tape]
    if any(b not in (0, 1) for b in tape):
        print("error: tape must be a 0/1 string", file=sys.stderr)
        return EXIT_USAGE
    tapes = rule110.simulate(tape, args.steps)
    for row in tapes:
        print("".join(str(b) for b in row))
    if args.dump:
        g, layout = rule110.build(tape)
        from .engine import step as engine_step

        rule = rule110.rule110_energy(rule110.DEFAULT_BETA)
        th = Thresholds(rule110.DEFAULT_BETA, rule110.DEFAULT_BETA)
        sched = rule110.half_step_schedule(layout)
        ctx = RuleContext(initial_graph=g)
        traj = [g]
        for s in range(2 * args.steps):
            g = engine_step(g, rule, th, sched, s, ctx)
            traj.append(g)
        dump_trajectory(traj, args.dump)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify experiments: each yields (label, ok) pairs

def _verify_kcore(args: argparse.Namespace) -> Iterable[tuple[str, bool]]:
    th = Thresholds(args.alpha, args.n)
    rule, sched = min_degree_rule()
    for seed in range(args.seeds):
        g0 = random_connected_graph(args.n, args.p, seed)
        cfg = RunConfig(rule, th, sched, g0, record_trajectory=True)
        outcome, traj = run(cfg)
        assert traj is not None
        final = traj[-1]
        core_nodes, core = oracles.alpha_core(g0, int(args.alpha))
        live = frozenset(u for u in range(final.n) if final.degree(u) > 0)
        ok = (
            outcome.kind == CONVERGED
            and final.edges == core.edges
            and live == (core_nodes if core.edges else frozenset())
        )
        yield f"kcore seed={seed}", ok


def _verify_ssad(args: argparse.Namespace) -> Iterable[tuple[str, bool]]:
    th = Thresholds(1, 2)
    rule, sched = ssad_rule(th)
    rng = random.Random(7)
    for seed in range(args.seeds):
        g0 = random_connected_graph(args.n, args.p, seed)
        src = rng.randrange(g0.n)
        ctx = RuleContext(initial_graph=g0, source=src)
        cfg = RunConfig(rule, th, sched, g0, context=ctx, record_trajectory=True)
        outcome, traj = run(cfg)
        assert traj is not None
        want = oracles.shortest_path_edges_from(g0, src)
        ok = outcome.kind == CONVERGED and traj[-1].edges == frozenset(want)
        yield f"ssad seed={seed} source={src}", ok


def sssd_far_instance(seed: int) -> tuple[Graph, int, int]:
    """Seeded connected instance whose endpoints are at distance >= 7."""
    rng = random.Random(seed)
    n_path = rng.randrange(9, 15)
    g = random_long_path_graph(n_path, rng.randrange(0, 4), seed * 7 + 1)
    edges = set(g.edges)
    n = g.n
    for _ in range(rng.randrange(0, 5)):
        attach = rng.randrange(1, n_path - 1)
        edges.add(node_pair(attach, n))
        n += 1
    g = Graph(n, edges)
    if g.distances_from(0)[n_path - 1] < 7:
        return sssd_far_instance(seed + 100_003)
    return g, 0, n_path - 1


def _verify_sssd(args: argparse.Namespace) -> Iterable[tuple[str, bool]]:
    th = Thresholds(1, 2)
    rule, sched = sssd_rule(th)
    rng = random.Random(13)

    def one(g0: Graph, src: int, tgt: int, label: str) -> tuple[str, bool]:
        ctx = RuleContext(initial_graph=g0, source=src, target=tgt)
        cfg = RunConfig(rule, th, sched, g0, context=ctx, record_trajectory=True)
        outcome, traj = run(cfg)
        assert traj is not None
        want = set(oracles.shortest_path_edges_between(g0, src, tgt))
        want.add(node_pair(src, tgt))
        ok = outcome.kind == CONVERGED and traj[-1].edges == frozenset(want)
        return label, ok

    half = args.seeds // 2
    for seed in range(half):
        g0 = random_connected_graph(args.n, args.p, seed)
        src = rng.randrange(g0.n)
        tgt = rng.choice([x for x in range(g0.n) if x != src])
        yield one(g0, src, tgt, f"sssd near seed={seed}")
    for seed in range(args.seeds - half):
        g0, src, tgt = sssd_far_instance(seed)
        yield one(g0, src, tgt, f"sssd far seed={seed}")


def _verify_rule110(args: argparse.Namespace) -> Iterable[tuple[str, bool]]:
    rng = random.Random(42)
    for seed in range(args.seeds):
        width = max(4, args.width or rng.randrange(4, 17))
        tape = [rng.randrange(2) for _ in range(width)]
        got = rule110.simulate(tape, args.steps)
        want = oracles.rule110_direct(tape, args.steps)
        yield f"rule110 seed={seed} width={width}", got == want


def _verify_gs_cycle(args: argparse.Namespace) -> Iterable[tuple[str, bool]]:
    th = Thresholds(2, 2)
    rule, sched = common_neighbors_rule()
    for S in args.s:
        g0 = g_s(S)
        cfg = RunConfig(rule, th, sched, g0)
        outcome, _ = run(cfg)
        want = oracles.expected_cycle_size(S)
        ok = outcome.kind == CYCLIC and outcome.cycle_length == want
        yield f"gs-cycle S={S} expected={want} got={outcome.cycle_length}", ok


def _verify_zhang(args: argparse.Namespace) -> Iterable[tuple[str, bool]]:
    th = Thresholds(2, 2)
    for S in (5, 7):
        g0 = g_s(S)
        cn_rule, cn_sched = common_neighbors_rule()
        z_rule, z_sched = zhang_rule()
        steps = 3 * oracles.expected_cycle_size(S)
        cap = steps + 1
        cfg_cn = RunConfig(cn_rule, th, cn_sched, g0, step_cap=cap, record_trajectory=True)
        cfg_z = RunConfig(z_rule, th, z_sched, g0, step_cap=cap, record_trajectory=True)
        out_cn, traj_cn = run(cfg_cn)
        out_z, traj_z = run(cfg_z)
        assert traj_cn is not None and traj_z is not None
        same = all(
            a == b for a, b in zip(traj_cn[: steps + 1], traj_z[: steps + 1])
        )
        ok = same and out_cn.kind != CONVERGED and out_z.kind != CONVERGED
        yield f"zhang-equality S={S}", ok


def _verify_k9(args: argparse.Namespace) -> Iterable[tuple[str, bool]]:
    first, second = k9_vs_g3_instances()
    out1, traj1 = run(first)
    ok1 = (
        out1.kind == CONVERGED
        and traj1 is not None
        and traj1[-1].num_edges() == 0
        and out1.converge_time is not None
        and out1.converge_time <= 2
    )
    yield "k9-dependence instance=1 null-graph", ok1
    out2, traj2 = run(second)
    ok2 = (
        out2.kind == CYCLIC
        and traj2 is not None
        and len(traj2) > 1
        and traj2[1].edges == g_s(3).edges
    )
    yield "k9-dependence instance=2 torus-grid", ok2


VERIFIERS = {
    "kcore": _verify_kcore,
    "ssad": _verify_ssad,
    "sssd": _verify_sssd,
    "rule110": _verify_rule110,
    "gs-cycle": _verify_gs_cycle,
    "zhang-equality": _verify_zhang,
    "k9-dependence": _verify_k9,
}


def cmd_verify(args: argparse.Namespace) -> int:
    all_ok = True
    for label, ok in VERIFIERS[args.experiment](args):
        print(f"{'PASS' if ok else 'FAIL'} {label}")
        all_ok = all_ok and ok
    return EXIT_OK if all_ok else EXIT_VERIFY


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netdyn",
        description="Deterministic threshold-driven dynamic-topology network runs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one trajectory and print a report")
    p_run.add_argument("--rule", required=True, help="rule id, e.g. min_degree")
    p_run.add_argument("--alpha", type=float, required=True)
    p_run.add_argument("--beta", type=float, required=True)
    group = p_run.add_mutually_exclusive_group(required=True)
    group.add_argument("--gen", help="generator spec, e.g. path:10 or er:20,0.3,42")
    group.add_argument("--graph", help="edge-list file")
    p_run.add_argument("--cap", type=int, default=None, help="step cap")
    p_run.add_argument("--seed", type=int, default=0, help="seed for random schedules")
    p_run.add_argument("--source", type=int, default=None)
    p_run.add_argument("--target", type=int, default=None)
    p_run.add_argument("--dump", help="directory for per-step edge lists")
    p_run.add_argument("--trace", action="store_true", help="per-step edge counts")
    p_run.set_defaults(fn=cmd_run)

    p_ver = sub.add_parser("verify", help="run a simulation-vs-oracle experiment")
    p_ver.add_argument("experiment", choices=sorted(VERIFIERS))
    p_ver.add_argument("--n", type=int, default=20)
    p_ver.add_argument("--p", type=float, default=0.3)
    p_ver.add_argument("--alpha", type=float, default=3)
    p_ver.add_argument("--seeds", type=int, default=50)
    p_ver.add_argument("--width", type=int, default=0, help="rule110 tape width (0 = random)")
    p_ver.add_argument("--steps", type=int, default=16)
    p_ver.add_argument("--s", type=_int_list, default=[3, 5, 7, 9, 11, 13])
    p_ver.set_defaults(fn=cmd_verify)

    p_sp = sub.add_parser("shortest", help="run a shortest-path system to convergence")
    p_sp.add_argument("--graph", required=True, help="edge-list file")
    p_sp.add_argument("--source", type=int, required=True)
    p_sp.add_argument("--target", type=int, default=None)
    p_sp.add_argument("--alpha", type=float, default=1)
    p_sp.add_argument("--beta", type=float, default=2)
    p_sp.add_argument("--cap", type=int, default=None)
    p_sp.add_argument("--out", help="output edge-list file (default stdout)")
    p_sp.set_defaults(fn=cmd_shortest)

    p_ca = sub.add_parser("rule110", help="run the automaton on cell gadgets")
    p_ca.add_argument("--tape", required=True, help="bitstring, width >= 4")
    p_ca.add_argument("--steps", type=int, required=True)
    p_ca.add_argument("--dump", help="directory for per-engine-step edge lists")
    p_ca.set_defaults(fn=cmd_rule110)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
