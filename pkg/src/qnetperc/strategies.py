"""Percolation strategies as expression trees and their Schmidt-value thresholds.

A strategy is a finite tree of Leaf (an input state slot), Swap (series
composition of exactly two subtrees) and Distill (parallel composition of one
or more subtrees).  Evaluating a tree under a slot binding yields the Schmidt
value of the state the strategy produces.  The threshold of a strategy is the
largest uniform input Schmidt value for which the output is still maximally
entangled; it is found by bisecting the unclipped product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from . import states
from .tolerances import BISECTION_MAX_ITER, BISECTION_TOL

__all__ = [
    "Leaf",
    "Swap",
    "Distill",
    "StrategyExpr",
    "CatalogEntry",
    "slots",
    "uniform_binding",
    "evaluate",
    "evaluate_unclipped",
    "solve_threshold",
    "standard_catalog",
]


@dataclass(frozen=True)
class Leaf:
    slot: int


@dataclass(frozen=True)
class Swap:
    left: "StrategyExpr"
    right: "StrategyExpr"


@dataclass(frozen=True)
class Distill:
    children: tuple["StrategyExpr", ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise ValueError("Distill needs at least one child")


StrategyExpr = Union[Leaf, Swap, Distill]


def slots(expr: StrategyExpr) -> set[int]:
    """All slot ids appearing in the tree."""
    if isinstance(expr, Leaf):
        return {expr.slot}
    if isinstance(expr, Swap):
        return slots(expr.left) | slots(expr.right)
    out: set[int] = set()
    for child in expr.children:
        out |= slots(child)
    return out


def uniform_binding(expr: StrategyExpr, lam: float) -> dict[int, float]:
    """Bind every slot of the tree to the same Schmidt value."""
    return {slot: lam for slot in slots(expr)}


def evaluate(expr: StrategyExpr, binding: Mapping[int, float]) -> float:
    """Schmidt value produced by the strategy under the given binding.

    Every Distill node clamps its product at 1/2: each distilled state is a
    physical state that later operations may consume.
    """
    if isinstance(expr, Leaf):
        try:
            return binding[expr.slot]
        except KeyError:
            raise ValueError(f"unbound slot {expr.slot}") from None
    if isinstance(expr, Swap):
        return states.swap(evaluate(expr.left, binding), evaluate(expr.right, binding))
    prod = 1.0
    for child in expr.children:
        prod *= evaluate(child, binding)
    return max(0.5, prod)


def evaluate_unclipped(expr: StrategyExpr, binding: Mapping[int, float]) -> float:
    """Like :func:`evaluate` but the top-level Distill does not clamp.

    This is the left-hand side of the threshold inequality: the bare product
    whose crossing of 1/2 defines the strategy's threshold.  Inner Distill
    nodes still clamp.
    """
    if isinstance(expr, Distill):
        prod = 1.0
        for child in expr.children:
            prod *= evaluate(child, binding)
        return prod
    return evaluate(expr, binding)


def _uniform_product(expr: StrategyExpr, lam: float) -> float:
    return evaluate_unclipped(expr, uniform_binding(expr, lam))


def solve_threshold(expr: StrategyExpr, tol: float = BISECTION_TOL) -> float:
    """Largest uniform Schmidt value for which the strategy still reaches 1/2.

    Bisects f(lam) = unclipped product, after checking on a 101-point grid
    that f is non-decreasing (all primitives are monotone; the check guards
    against malformed expressions).  Rejects strategies with f(1/2) > 1/2,
    which cannot reach maximal entanglement even from perfect inputs.
    """
    grid = [0.5 + i * 0.005 for i in range(101)]
    values = [_uniform_product(expr, lam) for lam in grid]
    for i in range(len(values) - 1):
        if values[i + 1] < values[i] - 1e-12:
            raise ValueError("strategy product is not monotone in lambda")
    if values[0] > 0.5 + 1e-12:
        raise ValueError("strategy cannot reach maximal entanglement at lambda = 1/2")
    if values[-1] <= 0.5:
        return 1.0
    lo, hi = 0.5, 1.0
    for _ in range(BISECTION_MAX_ITER):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if _uniform_product(expr, mid) <= 0.5:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expr: StrategyExpr
    published_threshold: float | None


def _fresh_leaf(counter: list[int]) -> Leaf:
    counter[0] += 1
    return Leaf(counter[0] - 1)


def _simple(n_swaps: int, n_leaves: int) -> StrategyExpr:
    """Distill of n_swaps single swaps plus n_leaves direct states."""
    counter = [0]
    children: list[StrategyExpr] = []
    for _ in range(n_swaps):
        children.append(Swap(_fresh_leaf(counter), _fresh_leaf(counter)))
    for _ in range(n_leaves):
        children.append(_fresh_leaf(counter))
    return Distill(tuple(children))


def standard_catalog() -> list[CatalogEntry]:
    """The named strategies with published thresholds, in publication order.

    The final entry distills two states that each result from a recursive
    swap (a swap of a state with an already-swapped pair); it has no
    published threshold.
    """
    counter = [0]
    rec = Distill(
        (
            Swap(_fresh_leaf(counter), Swap(_fresh_leaf(counter), _fresh_leaf(counter))),
            Swap(_fresh_leaf(counter), Swap(_fresh_leaf(counter), _fresh_leaf(counter))),
        )
    )
    counter2 = [0]
    two_s_one_ss = Distill(
        (
            Swap(_fresh_leaf(counter2), _fresh_leaf(counter2)),
            Swap(_fresh_leaf(counter2), _fresh_leaf(counter2)),
            Swap(
                _fresh_leaf(counter2),
                Swap(_fresh_leaf(counter2), _fresh_leaf(counter2)),
            ),
        )
    )
    return [
        CatalogEntry("2S2D", _simple(2, 0), 0.6498),
        CatalogEntry("1S2D", _simple(1, 1), 0.675),
        CatalogEntry("2S+1SS,3D", two_s_one_ss, 0.705),
        CatalogEntry("3S3D", _simple(3, 0), 0.718),
        CatalogEntry("2S3D", _simple(2, 1), 0.742),
        CatalogEntry("4S4D", _simple(4, 0), 0.759),
        CatalogEntry("3S4D", _simple(3, 1), 0.779),
        CatalogEntry("2SS2D", rec, None),
    ]
