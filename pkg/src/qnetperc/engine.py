"""Physics-informed heuristic for connecting distant node pairs.

One sample of the heuristic walks from the source toward the target: at each
step it considers every node within two alive hops of the current node that
the sample's distance rule admits, finds the best local strategy (an
edge-disjoint set of direct links and two-link swap paths, distilled into one
state), applies the chosen strategy eagerly, and hops.  On reaching the
target the per-hop states are swapped in sequence into one source-target
state.  Before that assembly, any imperfect per-hop state may be improved by
routing an alternative path between its endpoints and distilling it in.

Samples run on a pristine snapshot each time with a per-sample seed.  Early
samples are strict (only strictly-closer hops, only exactly optimal local
solutions); later samples relax both the distance rule and the local
optimality slack.  Pairs of imperfect solutions whose consumed-link sets are
disjoint are additionally combined by distillation.  The best solution wins:
maximal entanglement first, then fewest destroyed originals, then earliest
sample.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from . import states
from .network import QuantumNetwork
from .seeding import derive_seed

__all__ = [
    "STRICT",
    "ALLOW_EQUAL",
    "ALLOW_PLUS_ONE",
    "DISTANCE_MODES",
    "HeuristicParams",
    "LocalResource",
    "LocalSolution",
    "PathSolution",
    "enumerate_local_resources",
    "best_local_strategy",
    "route",
    "improve_path",
    "sample_and_select",
]

STRICT = 0
ALLOW_EQUAL = 1
ALLOW_PLUS_ONE = 2

DISTANCE_MODES = {"strict": STRICT, "allow-equal": ALLOW_EQUAL, "allow-plus-one": ALLOW_PLUS_ONE}
DISTANCE_MODE_NAMES = {v: k for k, v in DISTANCE_MODES.items()}

# Exact subset search is used up to this many local resources.
EXACT_SEARCH_LIMIT = 12

# A sample's slack may be infinite (free exploration among candidate nodes),
# but the subset choice within one candidate keeps a bounded window so every
# candidate still puts its best state forward.
SUBSET_SLACK_CAP = 0.05


@dataclass(frozen=True)
class HeuristicParams:
    """Tunables of the sampling heuristic.

    Schedules are breakpoint lists ``(first_sample, value)`` that must start
    at sample 0; each entry applies until the next breakpoint.  When omitted,
    the sample range splits into thirds: strict with no slack, then
    allow-equal with slack 0.02, then allow-plus-one with slack 0.05.
    """

    samples: int = 600
    max_improve_iterations: int = 10
    slack_schedule: tuple[tuple[int, float], ...] | None = None
    distance_schedule: tuple[tuple[int, str], ...] | None = None

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if self.max_improve_iterations < 0:
            raise ValueError("max_improve_iterations must be non-negative")
        for sched, what in ((self.slack_schedule, "slack"), (self.distance_schedule, "distance")):
            if sched is None:
                continue
            starts = [s for s, _ in sched]
            if not starts or starts[0] != 0 or starts != sorted(set(starts)):
                raise ValueError(f"{what} schedule must start at 0 with increasing breakpoints")
        if self.slack_schedule is not None:
            if any(delta < 0 for _, delta in self.slack_schedule):
                raise ValueError("slack values must be non-negative")
        if self.distance_schedule is not None:
            for _, mode in self.distance_schedule:
                if mode not in DISTANCE_MODES:
                    raise ValueError(f"unknown distance mode {mode!r}")

    def default_breakpoints(self) -> tuple[int, int]:
        third = max(1, math.ceil(self.samples / 3))
        return third, min(self.samples, 2 * third)

    def schedule(self) -> list[tuple[int, float]]:
        """Per-sample (distance mode, slack) pairs."""
        b1, b2 = self.default_breakpoints()
        slack_bp = self.slack_schedule or ((0, 0.0), (b1, 0.02), (b2, math.inf))
        dist_bp = self.distance_schedule or (
            (0, "strict"),
            (b1, "allow-equal"),
            (b2, "allow-plus-one"),
        )
        out = []
        si = di = 0
        slack = slack_bp[0][1]
        mode = DISTANCE_MODES[dist_bp[0][1]]
        for s in range(self.samples):
            while si + 1 < len(slack_bp) and slack_bp[si + 1][0] <= s:
                si += 1
                slack = slack_bp[si][1]
            while di + 1 < len(dist_bp) and dist_bp[di + 1][0] <= s:
                di += 1
                mode = DISTANCE_MODES[dist_bp[di][1]]
            out.append((mode, slack))
        return out


@dataclass(frozen=True)
class LocalResource:
    """One way to produce a state between a node pair: an existing direct
    link (cost 1) or a two-link swap path through ``via`` (cost 2)."""

    kind: str  # "direct" or "swap-path"
    link_ids: tuple[int, ...]
    via: Optional[int]
    resulting_lambda: float
    cost: int


@dataclass(frozen=True)
class LocalSolution:
    """An edge-disjoint resource subset distilled into one state."""

    target: int
    chosen: tuple[LocalResource, ...]
    final_lambda: float
    destroyed: int


@dataclass(frozen=True)
class PathSolution:
    """Outcome of one percolation attempt (or a combination of two).

    ``log`` replays on a pristine snapshot: each entry is
    ("swap", in1, in2, out) or ("distill", (ins...), out), with link ids as
    they were assigned during this attempt.  Combined solutions keep their
    two parents instead of a merged log.
    """

    source: int
    target: int
    final_lambda: float
    destroyed: int
    failed: bool
    origin: frozenset[int]
    hops: tuple[tuple[int, int], ...]
    log: tuple = ()
    final_link: Optional[int] = None
    sample_index: Optional[int] = None
    assembled: bool = False
    chain: tuple[tuple[int, int, int], ...] = ()
    parents: Optional[tuple["PathSolution", "PathSolution"]] = None

    @property
    def entanglement(self) -> float:
        return 0.0 if self.failed else states.entanglement(self.final_lambda)


# ---------------------------------------------------------------------------
# local strategies


def _collect_resources(
    net: QuantumNetwork, u: int, v: int, exclude: frozenset[int]
) -> tuple[list[tuple[float, int]], list[tuple[float, int, int, int]]]:
    """Direct links (lam, id) and swap paths (lam, l1, l2, via) from u to v."""
    links = net.links
    adjacency = net.adjacency
    directs = []
    for link_id in adjacency[u].get(v, ()):
        if link_id not in exclude:
            directs.append((links[link_id].lam, link_id))
    paths = []
    adj_v = adjacency[v]
    for via, ids1 in adjacency[u].items():
        if via == v:
            continue
        ids2 = adj_v.get(via)
        if not ids2:
            continue
        for l1 in ids1:
            if l1 in exclude:
                continue
            lam1 = links[l1].lam
            for l2 in ids2:
                if l2 in exclude:
                    continue
                paths.append((states.swap(lam1, links[l2].lam), l1, l2, via))
    return directs, paths


def _select_subset(
    directs: list[tuple[float, int]],
    paths: list[tuple[float, int, int, int]],
    slack: float,
    may_conflict: bool = True,
) -> Optional[tuple[float, int, list[tuple[float, int]], list[tuple[float, int, int, int]]]]:
    """Pick the resource subset: minimal final lambda first, then, among
    subsets within ``slack`` of that optimum, minimal destruction.

    Returns (final_lambda, cost, chosen_directs, chosen_paths) or None.
    With pairwise link-disjoint resources the optimum of any size class uses
    the smallest-lambda members, so scanning (a directs, b paths) counts is
    exact; overlapping resources (possible only with parallel links on a
    swap-path leg) fall back to subset enumeration.
    """
    if not directs and not paths:
        return None

    has_conflict = False
    if may_conflict and len(paths) > 1:
        seen: set[int] = set()
        for _, l1, l2, _ in paths:
            if l1 in seen or l2 in seen:
                has_conflict = True
                break
            seen.add(l1)
            seen.add(l2)

    if not has_conflict:
        ds = sorted(directs) if len(directs) > 1 else directs
        ps = sorted(paths) if len(paths) > 1 else paths
        dprod = [1.0]
        acc = 1.0
        for lam, _ in ds:
            acc *= lam
            dprod.append(acc)
        pprod = [1.0]
        acc = 1.0
        for item in ps:
            acc *= item[0]
            pprod.append(acc)
        nd = len(ds)
        np_ = len(ps)
        best_lam = 2.0
        for a in range(nd + 1):
            base = dprod[a]
            for b in range(np_ + 1):
                if a + b == 0:
                    continue
                prod = base * pprod[b]
                lam = prod if prod > 0.5 else 0.5
                if lam < best_lam:
                    best_lam = lam
        limit = best_lam + slack
        pick_cost = -1
        pick = (2.0, 0, 0)
        for a in range(nd + 1):
            base = dprod[a]
            for b in range(np_ + 1):
                if a + b == 0:
                    continue
                prod = base * pprod[b]
                lam = prod if prod > 0.5 else 0.5
                if lam > limit:
                    continue
                cost = a + 2 * b
                if pick_cost < 0 or (cost, lam, a, b) < (pick_cost, *pick):
                    pick_cost = cost
                    pick = (lam, a, b)
        return pick[0], pick_cost, ds[: pick[1]], ps[: pick[2]]

    resources: list[tuple[float, int, tuple[int, ...], object]] = []
    for lam, link_id in sorted(directs):
        resources.append((lam, 1, (link_id,), (lam, link_id)))
    for lam, l1, l2, via in sorted(paths):
        resources.append((lam, 2, (l1, l2), (lam, l1, l2, via)))

    if len(resources) <= EXACT_SEARCH_LIMIT:
        chosen = _enumerate_subsets(resources, slack)
    else:
        chosen = _greedy_subset(resources, slack)
    if chosen is None:
        return None
    lam, cost, idxs = chosen
    sel_d = [resources[i][3] for i in idxs if resources[i][1] == 1]
    sel_p = [resources[i][3] for i in idxs if resources[i][1] == 2]
    return lam, cost, sel_d, sel_p  # type: ignore[return-value]


def _enumerate_subsets(resources, slack):
    n = len(resources)
    id_bits: dict[int, int] = {}
    res_masks = []
    for _, _, ids, _ in resources:
        mask = 0
        for link_id in ids:
            bit = id_bits.setdefault(link_id, 1 << len(id_bits))
            mask |= bit
        res_masks.append(mask)
    options = []
    best_lam = 2.0
    for mask in range(1, 1 << n):
        used = 0
        prod = 1.0
        cost = 0
        ok = True
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            if res_masks[i] & used:
                ok = False
                break
            used |= res_masks[i]
            prod *= resources[i][0]
            cost += resources[i][1]
        if not ok:
            continue
        lam = prod if prod > 0.5 else 0.5
        options.append((lam, cost, mask))
        if lam < best_lam:
            best_lam = lam
    if not options:
        return None
    limit = best_lam + slack
    pick = min((o for o in options if o[0] <= limit), key=lambda o: (o[1], o[0], o[2]))
    idxs = [i for i in range(n) if pick[2] >> i & 1]
    return pick[0], pick[1], idxs


def _greedy_subset(resources, slack):
    # Ascending-lambda greedy with a cost-pruning pass; used only past the
    # exact-search limit when resources share links.
    taken: list[int] = []
    used: set[int] = set()
    prod = 1.0
    for i, (lam, _, ids, _) in enumerate(resources):
        if any(link_id in used for link_id in ids):
            continue
        taken.append(i)
        used.update(ids)
        prod *= lam
    if not taken:
        return None
    best_lam = prod if prod > 0.5 else 0.5
    limit = best_lam + slack
    for i in sorted(taken, key=lambda i: (-resources[i][1], -resources[i][0])):
        if len(taken) == 1:
            break
        relaxed = prod / resources[i][0]
        if (relaxed if relaxed > 0.5 else 0.5) <= limit:
            taken.remove(i)
            prod = relaxed
    cost = sum(resources[i][1] for i in taken)
    lam = prod if prod > 0.5 else 0.5
    return lam, cost, sorted(taken)


def enumerate_local_resources(
    net: QuantumNetwork, u: int, v: int, exclude: frozenset[int] = frozenset()
) -> list[LocalResource]:
    """All direct links and two-link swap paths between nodes at distance <= 2."""
    dist = net.hop_distance(u, v, exclude)
    if dist not in (1, 2):
        raise ValueError(f"nodes {u} and {v} are not within two alive hops (got {dist})")
    directs, paths = _collect_resources(net, u, v, exclude)
    out = [
        LocalResource("direct", (link_id,), None, lam, 1) for lam, link_id in sorted(directs)
    ]
    out.extend(
        LocalResource("swap-path", (l1, l2), via, lam, 2)
        for lam, l1, l2, via in sorted(paths)
    )
    return out


def best_local_strategy(
    net: QuantumNetwork,
    u: int,
    v: int,
    slack: float = 0.0,
    exclude: frozenset[int] = frozenset(),
) -> Optional[LocalSolution]:
    """Best edge-disjoint local strategy from u to v, or None if no resource."""
    directs, paths = _collect_resources(net, u, v, exclude)
    sel = _select_subset(directs, paths, slack)
    if sel is None:
        return None
    lam, cost, sel_d, sel_p = sel
    chosen = tuple(
        [LocalResource("direct", (link_id,), None, rl, 1) for rl, link_id in sel_d]
        + [LocalResource("swap-path", (l1, l2), via, rl, 2) for rl, l1, l2, via in sel_p]
    )
    return LocalSolution(v, chosen, lam, cost)


# ---------------------------------------------------------------------------
# routing


class _Attempt:
    """Mutable state of one percolation attempt on the live network."""

    __slots__ = ("chain", "ops", "reserved", "failed")

    def __init__(self, reserved: frozenset[int]):
        self.chain: list[tuple[int, int, int]] = []
        self.ops: list[tuple] = []
        self.reserved: set[int] = set(reserved)
        self.failed = False


def _apply_local(net: QuantumNetwork, attempt: _Attempt, sel_d, sel_p) -> int:
    """Apply a chosen local strategy; returns the id of the produced link."""
    produced = []
    for _, l1, l2, _ in sorted(sel_p):
        nid = net.apply_swap(l1, l2)
        attempt.ops.append(("swap", l1, l2, nid))
        produced.append(nid)
    ids = sorted(link_id for _, link_id in sel_d) + produced
    if len(ids) > 1:
        ids = sorted(ids)
        nid = net.apply_distill(ids)
        attempt.ops.append(("distill", tuple(ids), nid))
        return nid
    return ids[0]


def _hop_candidates(
    net: QuantumNetwork,
    current: int,
    visited: set[int],
    mode: int,
    dist: list[int],
    reserved: set[int],
):
    """Nodes within two alive hops of ``current`` passing the distance rule,
    with their direct links and swap paths."""
    links = net.links
    adjacency = net.adjacency
    allowance = dist[current] + (1 if mode == ALLOW_PLUS_ONE else 0)
    strict_cut = dist[current] if mode == STRICT else allowance + 1

    direct_by: dict[int, list[tuple[float, int]]] = {}
    paths_by: dict[int, list[tuple[float, int, int, int]]] = {}
    conflicted: set[int] = set()

    def admissible(w: int) -> bool:
        if w in visited:
            return False
        dw = dist[w]
        if dw < 0:
            return False
        if mode == STRICT:
            return dw < strict_cut
        return dw <= allowance

    adm_cache: dict[int, bool] = {}
    for via, ids1 in adjacency[current].items():
        usable1 = [i for i in ids1 if i not in reserved]
        if not usable1:
            continue
        ok = adm_cache.get(via)
        if ok is None:
            ok = admissible(via)
            adm_cache[via] = ok
        if ok:
            bucket = direct_by.setdefault(via, [])
            bucket.extend((links[i].lam, i) for i in usable1)
        for w, ids2 in adjacency[via].items():
            if w == current:
                continue
            ok2 = adm_cache.get(w)
            if ok2 is None:
                ok2 = admissible(w)
                adm_cache[w] = ok2
            if not ok2:
                continue
            usable2 = [j for j in ids2 if j not in reserved]
            if not usable2:
                continue
            if len(usable1) > 1 or len(usable2) > 1:
                conflicted.add(w)
            bucket2 = paths_by.setdefault(w, [])
            for i in usable1:
                lam1 = links[i].lam
                for j in usable2:
                    bucket2.append((states.swap(lam1, links[j].lam), i, j, via))
    return direct_by, paths_by, conflicted


def _route_attempt(
    net: QuantumNetwork,
    source: int,
    target: int,
    mode: int,
    slack: float,
    rng: random.Random,
    dist: list[int],
    reserved: frozenset[int],
) -> _Attempt:
    """Hop from source toward target applying local strategies eagerly."""
    attempt = _Attempt(reserved)
    current = source
    visited = {source}
    empty: list = []
    subset_slack = min(slack, SUBSET_SLACK_CAP)
    while current != target:
        direct_by, paths_by, conflicted = _hop_candidates(
            net, current, visited, mode, dist, attempt.reserved
        )
        candidates = []
        for w in sorted(set(direct_by) | set(paths_by)):
            sel = _select_subset(
                direct_by.get(w, empty), paths_by.get(w, empty), subset_slack, w in conflicted
            )
            if sel is not None:
                candidates.append((sel[0], sel[1], w, sel))
        if not candidates:
            attempt.failed = True
            return attempt
        best = min(candidates, key=lambda c: (c[0], c[1], c[2]))
        if slack > 0.0:
            limit = best[0] + slack
            viable = [c for c in candidates if c[0] <= limit]
        else:
            viable = [c for c in candidates if c[0] == best[0] and c[1] == best[1]]
        lam, cost, w, sel = viable[rng.randrange(len(viable))]
        hop_link = _apply_local(net, attempt, sel[2], sel[3])
        attempt.reserved.add(hop_link)
        attempt.chain.append((current, w, hop_link))
        visited.add(w)
        current = w
    return attempt


def _assemble(net: QuantumNetwork, attempt: _Attempt) -> int:
    """Swap the per-hop chain into one source-target link."""
    cur = attempt.chain[0][2]
    for _, _, link_id in attempt.chain[1:]:
        nid = net.apply_swap(cur, link_id)
        attempt.ops.append(("swap", cur, link_id, nid))
        cur = nid
    return cur


def _improve_chain(
    net: QuantumNetwork,
    attempt: _Attempt,
    max_iterations: int,
    slack: float,
    rng: random.Random,
) -> None:
    """Distill alternative routes into imperfect per-hop states, in order.

    Alternative searches always run with the most relaxed distance rule:
    a path around a state necessarily visits nodes no closer to its far
    endpoint.  They never consume links of the chain itself.
    """
    for idx in range(len(attempt.chain)):
        u, v, _ = attempt.chain[idx]
        dist_v = net.original_distances(v)
        for _ in range(max_iterations):
            cur = attempt.chain[idx][2]
            if net.links[cur].lam <= 0.5:
                break
            alt = _route_attempt(
                net, u, v, ALLOW_PLUS_ONE, slack, rng, dist_v, frozenset(attempt.reserved)
            )
            if alt.failed or not alt.chain:
                # A stranded search may still have consumed links; keep its
                # operations in the log so replays stay faithful.
                attempt.ops.extend(alt.ops)
                if not alt.chain:
                    # Failed before the first hop: no link was consumed and no
                    # random choice was made, so retrying cannot differ.
                    break
                continue
            alt_link = _assemble(net, alt)
            attempt.ops.extend(alt.ops)
            merged_inputs = sorted((cur, alt_link))
            merged = net.apply_distill(merged_inputs)
            attempt.ops.append(("distill", tuple(merged_inputs), merged))
            attempt.reserved.discard(cur)
            attempt.reserved.add(merged)
            attempt.chain[idx] = (u, v, merged)


def _finish(
    net: QuantumNetwork,
    attempt: _Attempt,
    source: int,
    target: int,
    sample_index: Optional[int],
    assemble: bool,
) -> PathSolution:
    hops = tuple((u, v) for u, v, _ in attempt.chain)
    if attempt.failed:
        consumed: frozenset[int] = frozenset()
        for _, _, link_id in attempt.chain:
            consumed |= net.links[link_id].origin
        return PathSolution(
            source=source,
            target=target,
            final_lambda=1.0,
            destroyed=len(consumed),
            failed=True,
            origin=frozenset(),
            hops=hops,
            log=tuple(attempt.ops),
            sample_index=sample_index,
        )
    if assemble:
        final = _assemble(net, attempt)
        link = net.links[final]
        return PathSolution(
            source=source,
            target=target,
            final_lambda=link.lam,
            destroyed=len(link.origin),
            failed=False,
            origin=link.origin,
            hops=hops,
            log=tuple(attempt.ops),
            final_link=final,
            sample_index=sample_index,
            assembled=True,
            chain=((source, target, final),),
        )
    prospective = net.links[attempt.chain[0][2]].lam
    origin: frozenset[int] = frozenset()
    for _, _, link_id in attempt.chain:
        origin |= net.links[link_id].origin
    for _, _, link_id in attempt.chain[1:]:
        prospective = states.swap(prospective, net.links[link_id].lam)
    return PathSolution(
        source=source,
        target=target,
        final_lambda=prospective,
        destroyed=len(origin),
        failed=False,
        origin=origin,
        hops=hops,
        log=tuple(attempt.ops),
        sample_index=sample_index,
        assembled=False,
        chain=tuple(attempt.chain),
    )


def route(
    net: QuantumNetwork,
    source: int,
    target: int,
    params: HeuristicParams,
    sample_index: int,
    rng: random.Random,
    assemble: bool = True,
) -> PathSolution:
    """One percolation attempt under the schedule entry for ``sample_index``.

    Mutates the network.  Returns a failed solution on a dead end.
    """
    if source == target:
        raise ValueError("source and target must differ")
    mode, slack = params.schedule()[sample_index]
    dist = net.original_distances(target)
    attempt = _route_attempt(net, source, target, mode, slack, rng, dist, frozenset())
    return _finish(net, attempt, source, target, sample_index, assemble and not attempt.failed)


def improve_path(
    net: QuantumNetwork,
    solution: PathSolution,
    params: HeuristicParams,
    rng: random.Random,
    slack: float = 0.0,
) -> PathSolution:
    """Improve every imperfect per-hop state of ``solution`` by distilling in
    alternative routes, then assemble the chain.

    The solution must come from :func:`route` on this network lineage; its
    chain links must still be alive.
    """
    if solution.failed or not solution.chain:
        return solution
    attempt = _Attempt(frozenset(link_id for _, _, link_id in solution.chain))
    attempt.chain = list(solution.chain)
    attempt.ops = list(solution.log)
    _improve_chain(net, attempt, params.max_improve_iterations, slack, rng)
    if solution.assembled:
        # Chain is the single final link, possibly improved in place.
        final = attempt.chain[0][2]
        link = net.links[final]
        return PathSolution(
            source=solution.source,
            target=solution.target,
            final_lambda=link.lam,
            destroyed=len(link.origin),
            failed=False,
            origin=link.origin,
            hops=solution.hops,
            log=tuple(attempt.ops),
            final_link=final,
            sample_index=solution.sample_index,
            assembled=True,
            chain=((solution.source, solution.target, final),),
        )
    return _finish(net, attempt, solution.source, solution.target, solution.sample_index, True)


def sample_and_select(
    net: QuantumNetwork,
    source: int,
    target: int,
    params: HeuristicParams,
    master_seed: int,
    collect: Optional[list[PathSolution]] = None,
) -> PathSolution:
    """Run the full sampling heuristic and return the best solution found.

    The network is restored to its pristine state before every sample and
    after the last one.  When ``collect`` is a list, every per-sample
    solution is appended to it.
    """
    if source == target:
        raise ValueError("source and target must differ")
    pristine = net.snapshot()
    dist = net.original_distances(target)
    schedule = params.schedule()
    solutions: list[PathSolution] = []
    try:
        for index in range(params.samples):
            net.restore(pristine)
            mode, slack = schedule[index]
            rng = random.Random(derive_seed(master_seed, (index,)))
            attempt = _route_attempt(net, source, target, mode, slack, rng, dist, frozenset())
            if not attempt.failed:
                _improve_chain(net, attempt, params.max_improve_iterations, slack, rng)
            solution = _finish(net, attempt, source, target, index, not attempt.failed)
            solutions.append(solution)
            if collect is not None:
                collect.append(solution)
    finally:
        net.restore(pristine)

    successes = [s for s in solutions if not s.failed]
    if not successes:
        return min(solutions, key=lambda s: (s.destroyed, s.sample_index))

    # Distill pairs of imperfect, link-disjoint solutions into extra options.
    unique: dict[tuple[float, frozenset[int]], PathSolution] = {}
    for s in successes:
        unique.setdefault((s.final_lambda, s.origin), s)
    suboptimal = sorted(
        (s for s in unique.values() if s.final_lambda > 0.5),
        key=lambda s: s.sample_index,
    )
    combined: list[PathSolution] = []
    for i in range(len(suboptimal)):
        a = suboptimal[i]
        for j in range(i + 1, len(suboptimal)):
            b = suboptimal[j]
            if a.origin.isdisjoint(b.origin):
                combined.append(
                    PathSolution(
                        source=source,
                        target=target,
                        final_lambda=states.distill_pair(a.final_lambda, b.final_lambda),
                        destroyed=a.destroyed + b.destroyed,
                        failed=False,
                        origin=a.origin | b.origin,
                        hops=(),
                        sample_index=min(a.sample_index, b.sample_index),
                        parents=(a, b),
                    )
                )

    def rank(s: PathSolution):
        return (
            s.final_lambda,
            s.destroyed,
            0 if s.parents is None else 1,
            s.sample_index,
        )

    return min(successes + combined, key=rank)
