"""Command-line front end.

Subcommands: ``sweep`` and ``disorder-sweep`` run config-driven experiments,
``thresholds`` prints and self-checks the strategy catalog, ``topology``
emits a generated lattice as line-oriented text, and ``pair`` runs the
heuristic for a single node pair with a full operation log.

Exit codes: 0 success, 1 config error, 2 runtime failure, 3 threshold
self-check failure.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import emit as emit_mod
from . import states
from .config import ConfigError, ExperimentConfig, parse_config
from .disorder import DisorderSpec, assign
from .engine import HeuristicParams, sample_and_select
from .network import QuantumNetwork
from .seeding import derive_seed
from .strategies import solve_threshold, standard_catalog
from .sweep import run_disorder_sweep, run_uniform_sweep
from .topology import TOPOLOGY_KINDS, TopologySpec, build_topology

__all__ = ["main"]

THRESHOLD_CHECK_TOL = 1e-3


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="override the master seed")
    parser.add_argument("--output", default=None, help="override the output path")
    parser.add_argument("--format", choices=("csv", "json-lines"), default=None)
    parser.add_argument("--workers", type=int, default=1, help="parallel worker processes")


def _load_config(path: str, args) -> ExperimentConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    overrides = {}
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if args.output is not None:
        overrides["output"] = args.output
    if args.format is not None:
        overrides["format"] = args.format
    if overrides:
        from dataclasses import replace

        cfg = replace(cfg, **overrides)
    return cfg


def _cmd_sweep(args) -> int:
    cfg = _load_config(args.config, args)
    records = run_uniform_sweep(cfg, workers=args.workers)
    main_path, agg_path = emit_mod.emit(records, cfg.format, cfg.output)
    print(f"wrote {len(records)} records to {main_path} (aggregates: {agg_path})")
    return 0


def _cmd_disorder_sweep(args) -> int:
    cfg = _load_config(args.config, args)
    records = run_disorder_sweep(cfg, workers=args.workers)
    main_path, agg_path = emit_mod.emit(records, cfg.format, cfg.output)
    print(f"wrote {len(records)} records to {main_path} (aggregates: {agg_path})")
    return 0


def _cmd_thresholds(_args) -> int:
    print(f"{'name':<12} {'solved':>10} {'published':>10} {'|delta|':>10}")
    worst = 0.0
    for entry in standard_catalog():
        solved = solve_threshold(entry.expr)
        if entry.published_threshold is None:
            print(f"{entry.name:<12} {solved:>10.6f} {'-':>10} {'-':>10}")
            continue
        delta = abs(solved - entry.published_threshold)
        worst = max(worst, delta)
        print(f"{entry.name:<12} {solved:>10.6f} {entry.published_threshold:>10.4f} {delta:>10.2e}")
    if worst >= THRESHOLD_CHECK_TOL:
        print(f"threshold self-check FAILED: worst delta {worst:.2e}", file=sys.stderr)
        return 3
    return 0


def _cmd_topology(args) -> int:
    spec = TopologySpec(args.kind, args.rows, args.cols)
    net = build_topology(spec)
    lines = [f"nodes {net.num_nodes}"]
    for link_id in sorted(net.links):
        link = net.links[link_id]
        lines.append(f"{link.id} {link.u} {link.v} {link.lam:.9g}")
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def read_links_file(path: str) -> QuantumNetwork:
    """Read a network in the ``topology`` output format."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if not lines or not lines[0].startswith("nodes "):
        raise ConfigError(f"{path}: expected 'nodes N' header")
    try:
        num_nodes = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ConfigError(f"{path}: bad header {lines[0]!r}") from None
    links = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 4:
            raise ConfigError(f"{path}: bad link line {line!r}")
        try:
            _, u, v, lam = int(parts[0]), int(parts[1]), int(parts[2]), float(parts[3])
        except ValueError:
            raise ConfigError(f"{path}: bad link line {line!r}") from None
        links.append((u, v, lam))
    return QuantumNetwork(num_nodes, links)


def _cmd_pair(args) -> int:
    if args.links_file:
        net = read_links_file(args.links_file)
    elif args.kind:
        net = build_topology(TopologySpec(args.kind, args.rows, args.cols))
        spec = DisorderSpec(
            mode=args.disorder_mode,
            lambda_mean=args.lambda_mean,
            sigma=args.sigma,
            seed=derive_seed(args.seed or 0, (2, 0, 0)),
        )
        assign(net, spec)
    else:
        raise ConfigError("pair needs either --links-file or --kind/--rows/--cols")

    params = HeuristicParams(samples=args.samples, max_improve_iterations=args.max_improve_iters)
    master = args.seed if args.seed is not None else 0
    collected = []
    best = sample_and_select(net, args.source, args.target, params, master, collect=collected)

    dist = net.original_distances(args.target)[args.source]
    print(f"pair {args.source} -> {args.target}  distance {dist}  samples {params.samples}")
    for sol in collected:
        status = "failed" if sol.failed else f"lambda {sol.final_lambda:.9g}"
        hops = " ".join(f"{u}>{v}" for u, v in sol.hops)
        print(f"  sample {sol.sample_index:>4}: {status}  destroyed {sol.destroyed}  hops {hops}")
    print(
        f"selected: lambda {best.final_lambda:.9g}  E {best.entanglement:.9g}  "
        f"destroyed {best.destroyed}  failed {int(best.failed)}"
    )
    if best.parents is not None:
        print("selected solution distills two independent samples:")
        for parent in best.parents:
            print(f"  sample {parent.sample_index}: lambda {parent.final_lambda:.9g}")
    for sol in ([best] if best.parents is None else list(best.parents)):
        print(f"operation log (sample {sol.sample_index}):")
        for op in sol.log:
            if op[0] == "swap":
                print(f"  swap {op[1]} {op[2]} -> {op[3]}")
            else:
                print(f"  distill {' '.join(str(i) for i in op[1])} -> {op[2]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qnetperc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="uniform-lambda sweep from a config file")
    p_sweep.add_argument("config")
    _add_common(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_dis = sub.add_parser("disorder-sweep", help="disordered-lambda sweep from a config file")
    p_dis.add_argument("config")
    _add_common(p_dis)
    p_dis.set_defaults(func=_cmd_disorder_sweep)

    p_thr = sub.add_parser("thresholds", help="print the strategy threshold catalog")
    p_thr.set_defaults(func=_cmd_thresholds)

    p_topo = sub.add_parser("topology", help="emit a generated lattice as text")
    p_topo.add_argument("--kind", required=True, choices=TOPOLOGY_KINDS)
    p_topo.add_argument("--rows", type=int, required=True)
    p_topo.add_argument("--cols", type=int, required=True)
    p_topo.add_argument("--output", default=None)
    p_topo.set_defaults(func=_cmd_topology)

    p_pair = sub.add_parser("pair", help="run the heuristic for one node pair")
    p_pair.add_argument("--links-file", default=None, help="network in 'topology' output format")
    p_pair.add_argument("--kind", choices=TOPOLOGY_KINDS, default=None)
    p_pair.add_argument("--rows", type=int, default=1)
    p_pair.add_argument("--cols", type=int, default=1)
    p_pair.add_argument("--disorder-mode", choices=("uniform", "truncated-normal"), default="uniform")
    p_pair.add_argument("--lambda-mean", type=float, default=0.5)
    p_pair.add_argument("--sigma", type=float, default=0.0)
    p_pair.add_argument("--source", type=int, required=True)
    p_pair.add_argument("--target", type=int, required=True)
    p_pair.add_argument("--samples", type=int, default=600)
    p_pair.add_argument("--max-improve-iters", type=int, default=10)
    p_pair.add_argument("--seed", type=int, default=0)
    p_pair.set_defaults(func=_cmd_pair)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
