"""Initial Schmidt-value assignment: uniform or truncated normal with an
enforced mean.

Truncated-normal draws use rejection sampling on [1/2, 1] (clamping would
pile probability mass at the bounds and distort the connectivity curves).
The mean is then enforced by iteratively shifting all values and re-clipping
until the sample mean matches the request, which preserves the shape of the
distribution away from the bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .network import QuantumNetwork
from .tolerances import MEAN_ENFORCE_MAX_ITER, MEAN_ENFORCE_TOL

__all__ = ["DisorderSpec", "DISORDER_MODES", "MeanEnforcementError", "assign", "draw_values"]

DISORDER_MODES = ("uniform", "truncated-normal")


class MeanEnforcementError(RuntimeError):
    """Raised when shift-and-clip cannot reach the requested mean."""


@dataclass(frozen=True)
class DisorderSpec:
    mode: str
    lambda_mean: float
    sigma: float
    seed: int

    def __post_init__(self) -> None:
        if self.mode not in DISORDER_MODES:
            raise ValueError(f"unknown disorder mode {self.mode!r}")
        if not (0.5 <= self.lambda_mean <= 1.0):
            raise ValueError(f"lambda_mean {self.lambda_mean!r} outside [1/2, 1]")
        if self.sigma < 0.0:
            raise ValueError("sigma must be non-negative")


def draw_values(spec: DisorderSpec, count: int) -> list[float]:
    """Draw ``count`` Schmidt values according to the spec (deterministic)."""
    if count < 1:
        raise ValueError("need at least one link")
    if spec.mode == "uniform" or spec.sigma == 0.0:
        return [spec.lambda_mean] * count

    rng = random.Random(spec.seed)
    values = []
    for _ in range(count):
        while True:
            x = rng.gauss(spec.lambda_mean, spec.sigma)
            if 0.5 <= x <= 1.0:
                values.append(x)
                break

    for _ in range(MEAN_ENFORCE_MAX_ITER):
        mean = sum(values) / count
        if abs(mean - spec.lambda_mean) <= MEAN_ENFORCE_TOL:
            return values
        shift = spec.lambda_mean - mean
        values = [min(1.0, max(0.5, v + shift)) for v in values]
    raise MeanEnforcementError(
        f"could not enforce mean {spec.lambda_mean} (sigma={spec.sigma}) "
        f"within {MEAN_ENFORCE_MAX_ITER} iterations"
    )


def assign(net: QuantumNetwork, spec: DisorderSpec) -> None:
    """Assign initial Schmidt values to every original link of a fresh network."""
    if net.alive_count() != net.original_count:
        raise ValueError("disorder assignment requires a freshly built network")
    link_ids = sorted(net.links)
    values = draw_values(spec, len(link_ids))
    for link_id, lam in zip(link_ids, values):
        net.set_initial_lambda(link_id, lam)
