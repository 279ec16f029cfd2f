"""Schmidt-value algebra for pure two-qubit states.

A state sqrt(lam)|00> + sqrt(1-lam)|11> is represented by its larger Schmidt
coefficient ``lam`` in [1/2, 1].  lam = 1/2 is maximally entangled, lam = 1 a
product state.  All operations here are pure functions on floats; validation
happens where values enter the system (network construction, disorder
assignment, config parsing) via :func:`check_schmidt`.

``swap`` composes two states in series (Bell measurement at the shared node,
worst-case branch), ``distill_pair``/``distill_many`` compose parallel states
into one.  The majorization predicates and conversion probabilities cover the
general LOCC convertibility of four-entry Schmidt vectors.
"""

from __future__ import annotations

import math
from typing import Sequence

from .tolerances import ATOL

__all__ = [
    "check_schmidt",
    "check_schmidt_vector",
    "entanglement",
    "swap",
    "swap_epsilon",
    "distill_pair",
    "distill_many",
    "product_vector",
    "majorized_by",
    "submajorized_by",
    "distill_success_probability",
    "vidal_success_probability",
]


def check_schmidt(lam: float) -> float:
    """Validate a Schmidt value and clamp round-off back into [1/2, 1]."""
    if not (0.5 - ATOL <= lam <= 1.0 + ATOL):
        raise ValueError(f"Schmidt value {lam!r} outside [1/2, 1]")
    return min(1.0, max(0.5, lam))


def check_schmidt_vector(vec: Sequence[float]) -> tuple[float, ...]:
    """Validate a descending, normalized Schmidt vector."""
    v = tuple(float(x) for x in vec)
    if not v:
        raise ValueError("empty Schmidt vector")
    if any(x < -ATOL for x in v):
        raise ValueError(f"negative entry in Schmidt vector {v}")
    if any(v[i] < v[i + 1] - ATOL for i in range(len(v) - 1)):
        raise ValueError(f"Schmidt vector not descending: {v}")
    if abs(sum(v) - 1.0) > 1e-9:
        raise ValueError(f"Schmidt vector does not sum to 1: {v}")
    return v


def entanglement(lam: float) -> float:
    """Entanglement measure: twice the smaller Schmidt coefficient, 2(1 - lam)."""
    return 2.0 * (1.0 - lam)


def swap(a: float, b: float) -> float:
    """Schmidt value after swapping two states in series.

    Worst-case deterministic outcome of the Bell measurement at the shared
    node: (1 + sqrt(1 - 16 a(1-a) b(1-b))) / 2.  The radicand is analytically
    non-negative; tiny negative round-off is clamped to zero.
    """
    radicand = 1.0 - 16.0 * a * (1.0 - a) * b * (1.0 - b)
    if radicand < 0.0:
        radicand = 0.0
    return 0.5 * (1.0 + math.sqrt(radicand))


def swap_epsilon(e1: float, e2: float) -> float:
    """Imperfection form of :func:`swap`: eps = lam - 1/2.

    Satisfies swap(1/2+e1, 1/2+e2) = 1/2 + swap_epsilon(e1, e2).
    """
    value = e1 * e1 + e2 * e2 - 4.0 * e1 * e1 * e2 * e2
    if value < 0.0:
        value = 0.0
    return math.sqrt(value)


def distill_pair(a: float, b: float) -> float:
    """Best deterministic Schmidt value from distilling two parallel states."""
    return max(0.5, a * b)


def distill_many(vals: Sequence[float]) -> float:
    """Distill any number of parallel states: max(1/2, product).

    The clamp applies once, to the full product; folding :func:`distill_pair`
    pairwise gives the same answer only when no intermediate product dips
    below 1/2.
    """
    if not vals:
        raise ValueError("distill_many needs at least one state")
    prod = 1.0
    for v in vals:
        prod *= v
    return max(0.5, prod)


def product_vector(a: float, b: float) -> tuple[float, float, float, float]:
    """Descending Schmidt vector of the two-pair product state |a> (x) |b>."""
    entries = sorted(
        (a * b, a * (1.0 - b), b * (1.0 - a), (1.0 - a) * (1.0 - b)),
        reverse=True,
    )
    return tuple(entries)  # type: ignore[return-value]


def majorized_by(v: Sequence[float], w: Sequence[float], tol: float = ATOL) -> bool:
    """True iff v is majorized by w: every prefix sum of v <= that of w."""
    if len(v) != len(w):
        raise ValueError("vectors must have equal length")
    pv = pw = 0.0
    for x, y in zip(v, w):
        pv += x
        pw += y
        if pv > pw + tol:
            return False
    return True


def submajorized_by(v: Sequence[float], w: Sequence[float], tol: float = ATOL) -> bool:
    """True iff v is submajorized by w: every suffix sum of v >= that of w."""
    if len(v) != len(w):
        raise ValueError("vectors must have equal length")
    sv = sw = 0.0
    for x, y in zip(reversed(v), reversed(w)):
        sv += x
        sw += y
        if sv < sw - tol:
            return False
    return True


def distill_success_probability(a: float, b: float, target: float) -> float:
    """Best probability of converting |a> (x) |b> into a state with Schmidt
    value ``target`` (concentrating everything into one pair).

    min(1, (1 - ab) / (1 - target)).  The probability is exactly 1 whenever
    target >= max(1/2, ab), i.e. in the deterministic distillation regime.
    target = 1 is the limit of the formula and returns 1.
    """
    if target < 0.5 - ATOL:
        raise ValueError(f"target Schmidt value {target!r} below 1/2")
    if target >= 1.0:
        return 1.0
    return min(1.0, (1.0 - a * b) / (1.0 - target))


def vidal_success_probability(
    source: Sequence[float], target: Sequence[float], tol: float = ATOL
) -> float:
    """Best LOCC conversion probability between two Schmidt vectors.

    min over l of (suffix sum of source from l) / (suffix sum of target
    from l), clipped to [0, 1].  Positions where the target suffix vanishes
    contribute nothing when the source suffix vanishes too, and cap at 1
    otherwise (the ratio diverges in that limit).
    """
    if len(source) != len(target):
        raise ValueError("vectors must have equal length")
    best = 1.0
    ss = st = 0.0
    for x, y in zip(reversed(source), reversed(target)):
        ss += x
        st += y
        if st <= tol:
            if ss <= tol:
                continue
            ratio = 1.0
        else:
            ratio = ss / st
        if ratio < best:
            best = ratio
    return min(1.0, max(0.0, best))
