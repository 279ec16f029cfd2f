"""Sweep runner: grids of initial Schmidt values over selected node pairs.

Work splits into independent (grid point, network sample, pair) items whose
seeds all derive from the master seed, so records are identical no matter how
many workers run them.  Results come back sorted; ordering never depends on
scheduling.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass

from . import metrics
from .config import ExperimentConfig, PairSelection
from .disorder import DisorderSpec, assign
from .engine import sample_and_select
from .network import QuantumNetwork
from .seeding import derive_seed
from .topology import TopologySpec, build_topology

__all__ = ["SweepRecord", "select_pairs", "run_uniform_sweep", "run_disorder_sweep", "aggregate_records"]

# Stream labels keeping the independent random streams apart.
_STREAM_PAIR = 1
_STREAM_NETWORK = 2
_STREAM_SELECTION = 3


@dataclass(frozen=True)
class SweepRecord:
    topology: str
    rows: int
    cols: int
    mode: str
    lambda_mean: float
    sigma: float
    network_sample: int
    source: int
    target: int
    distance: int
    final_lambda: float
    entanglement: float
    destroyed: int
    integrity: float
    connectivity: float
    failed: bool
    seed: int


def select_pairs(
    net: QuantumNetwork, selection: PairSelection, master_seed: int
) -> list[tuple[int, int, int]]:
    """Selected (source, target, distance) triples, source < target."""
    if selection.kind == "explicit":
        out = []
        for u, v in selection.pairs:
            if u == v:
                raise ValueError(f"pair {u}-{v}: endpoints must differ")
            dist = net.original_distances(v)[u]
            if dist < 0:
                raise ValueError(f"pair {u}-{v}: not connected")
            out.append((u, v, dist))
        return out

    by_distance: dict[int, list[tuple[int, int]]] = {}
    for u in range(net.num_nodes):
        dist = net.original_distances(u)
        for v in range(u + 1, net.num_nodes):
            if dist[v] > 0:
                by_distance.setdefault(dist[v], []).append((v, u) if v < u else (u, v))
    out = []
    for d in sorted(by_distance):
        group = sorted(by_distance[d])
        if selection.kind == "per-distance-cap" and len(group) > selection.cap:
            rng = random.Random(derive_seed(master_seed, (_STREAM_SELECTION, d)))
            group = sorted(rng.sample(group, selection.cap))
        out.extend((u, v, d) for u, v in group)
    return out


@dataclass(frozen=True)
class _Task:
    grid_index: int
    lambda_mean: float
    network_sample: int
    source: int
    target: int
    distance: int


class _Runner:
    """Per-process state: the topology is built once, the disorder assignment
    is cached per (grid point, network sample)."""

    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg
        self.net = build_topology(cfg.topology)
        self._assigned_key: tuple[int, int] | None = None
        self._assigned_snapshot = None
        self._pristine = self.net.snapshot()

    def _ensure_assignment(self, task: _Task) -> None:
        key = (task.grid_index, task.network_sample)
        if self._assigned_key == key:
            self.net.restore(self._assigned_snapshot)
            return
        self.net.restore(self._pristine)
        spec = DisorderSpec(
            mode=self.cfg.disorder_mode,
            lambda_mean=task.lambda_mean,
            sigma=self.cfg.sigma,
            seed=derive_seed(
                self.cfg.master_seed, (_STREAM_NETWORK, task.grid_index, task.network_sample)
            ),
        )
        assign(self.net, spec)
        self._assigned_key = key
        self._assigned_snapshot = self.net.snapshot()

    def run(self, task: _Task) -> SweepRecord:
        self._ensure_assignment(task)
        seed = derive_seed(
            self.cfg.master_seed,
            (_STREAM_PAIR, task.grid_index, task.network_sample, task.source, task.target),
        )
        solution = sample_and_select(
            self.net, task.source, task.target, self.cfg.heuristics, seed
        )
        # Failed attempts may have consumed fewer links than the distance;
        # clamp so integrity stays in (0, 1].
        destroyed = solution.destroyed
        if solution.failed:
            destroyed = max(destroyed, task.distance, 1)
        outcome = metrics.PairOutcome(
            task.source, task.target, task.distance, solution.final_lambda, destroyed, solution.failed
        )
        return SweepRecord(
            topology=self.cfg.topology.kind,
            rows=self.cfg.topology.rows,
            cols=self.cfg.topology.cols,
            mode=self.cfg.disorder_mode,
            lambda_mean=task.lambda_mean,
            sigma=self.cfg.sigma,
            network_sample=task.network_sample,
            source=task.source,
            target=task.target,
            distance=task.distance,
            final_lambda=solution.final_lambda,
            entanglement=solution.entanglement,
            destroyed=destroyed,
            integrity=metrics.integrity(outcome),
            connectivity=metrics.connectivity(outcome),
            failed=solution.failed,
            seed=seed,
        )


_WORKER_RUNNER: _Runner | None = None


def _init_worker(cfg: ExperimentConfig) -> None:
    global _WORKER_RUNNER
    _WORKER_RUNNER = _Runner(cfg)


def _run_task(task: _Task) -> SweepRecord:
    return _WORKER_RUNNER.run(task)


def _record_order(r: SweepRecord):
    return (r.lambda_mean, r.network_sample, r.distance, r.source, r.target)


def _run(cfg: ExperimentConfig, network_samples: int, workers: int) -> list[SweepRecord]:
    net = build_topology(cfg.topology)
    pairs = select_pairs(net, cfg.pair_selection, cfg.master_seed)
    if not pairs:
        raise ValueError("pair selection produced no pairs")
    tasks = [
        _Task(gi, lam, ns, u, v, d)
        for gi, lam in enumerate(cfg.grid)
        for ns in range(network_samples)
        for (u, v, d) in pairs
    ]
    if workers > 1:
        ctx = multiprocessing.get_context("fork")
        chunk = max(1, len(tasks) // (workers * 8))
        with ctx.Pool(workers, initializer=_init_worker, initargs=(cfg,)) as pool:
            records = list(pool.imap_unordered(_run_task, tasks, chunksize=chunk))
    else:
        runner = _Runner(cfg)
        records = [runner.run(t) for t in tasks]
    records.sort(key=_record_order)
    return records


def run_uniform_sweep(cfg: ExperimentConfig, workers: int = 1) -> list[SweepRecord]:
    """One record per (grid value, pair), every link set to the grid value."""
    if cfg.disorder_mode != "uniform":
        raise ValueError("run_uniform_sweep requires disorder mode 'uniform'")
    return _run(cfg, network_samples=1, workers=workers)


def run_disorder_sweep(cfg: ExperimentConfig, workers: int = 1) -> list[SweepRecord]:
    """One record per (mean, network sample, pair) with disordered initial values."""
    return _run(cfg, network_samples=cfg.network_samples, workers=workers)


def aggregate_records(
    records: list[SweepRecord],
) -> list[tuple[float, float, int, float, float, float, int]]:
    """(lambda_mean, sigma, distance, mean E, mean I, mean K, count) rows,
    averaged over pairs and network samples."""
    sums: dict[tuple[float, float, int], list[float]] = {}
    for r in records:
        acc = sums.setdefault((r.lambda_mean, r.sigma, r.distance), [0.0, 0.0, 0.0, 0])
        acc[0] += r.entanglement
        acc[1] += r.integrity
        acc[2] += r.connectivity
        acc[3] += 1
    return [
        (lam, sigma, d, se / n, si / n, sk / n, n)
        for (lam, sigma, d), (se, si, sk, n) in sorted(sums.items())
    ]
