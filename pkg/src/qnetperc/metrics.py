"""Integrity and connectivity of percolation outcomes.

Integrity is hop distance over originals destroyed: 1 when the connection
cost its theoretical minimum, smaller the more the network was damaged.
Connectivity multiplies that by the entanglement of the final state, scoring
outcome quality and network preservation jointly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .states import entanglement

__all__ = ["PairOutcome", "DistanceAggregate", "integrity", "connectivity", "aggregate_by_distance"]


@dataclass(frozen=True)
class PairOutcome:
    source: int
    target: int
    distance: int
    final_lambda: float
    destroyed: int
    failed: bool = False


@dataclass(frozen=True)
class DistanceAggregate:
    mean_entanglement: float
    mean_integrity: float
    mean_connectivity: float
    count: int


def integrity(outcome: PairOutcome) -> float:
    if outcome.destroyed < 1:
        raise ValueError("destroyed count must be at least 1")
    return outcome.distance / outcome.destroyed


def connectivity(outcome: PairOutcome) -> float:
    e = 0.0 if outcome.failed else entanglement(outcome.final_lambda)
    return e * integrity(outcome)


def aggregate_by_distance(outcomes: list[PairOutcome]) -> dict[int, DistanceAggregate]:
    """Arithmetic means of E, integrity and connectivity per distance class."""
    if not outcomes:
        raise ValueError("no outcomes to aggregate")
    sums: dict[int, list[float]] = {}
    for o in outcomes:
        e = 0.0 if o.failed else entanglement(o.final_lambda)
        i = integrity(o)
        acc = sums.setdefault(o.distance, [0.0, 0.0, 0.0, 0])
        acc[0] += e
        acc[1] += i
        acc[2] += e * i
        acc[3] += 1
    return {
        d: DistanceAggregate(se / n, si / n, sk / n, n)
        for d, (se, si, sk, n) in sorted(sums.items())
    }
