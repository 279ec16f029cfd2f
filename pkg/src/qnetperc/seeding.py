"""Deterministic seed derivation for independent random streams.

Every random decision in a run is driven by a stream seed derived from the
master seed and a tuple of integer labels (lambda index, network sample,
node pair, sample index, ...).  Derivation is a chain of splitmix64 finalizer
steps, so it is order-sensitive, collision-resistant and identical on every
platform:

    state = mix(master)
    for each label: state = mix(state XOR mix(label))

where mix is the splitmix64 finalizer (add golden-gamma, two xor-multiply
rounds, final xor-shift), all arithmetic modulo 2^64.
"""

from __future__ import annotations

from typing import Iterable

__all__ = ["derive_seed"]

_MASK = 0xFFFFFFFFFFFFFFFF


def _mix(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(master: int, labels: Iterable[int]) -> int:
    """Derive a 64-bit stream seed from a master seed and integer labels."""
    state = _mix(master & _MASK)
    for label in labels:
        state = _mix(state ^ _mix(label & _MASK))
    return state
