"""Entanglement percolation in planar quantum networks of pure two-qubit states.

Simulates swap/distill percolation strategies, solves their Schmidt-value
thresholds, and runs a physics-informed heuristic that connects distant node
pairs while tracking entanglement, network integrity, and connectivity.
"""

from .disorder import DisorderSpec, assign
from .engine import (
    HeuristicParams,
    LocalResource,
    LocalSolution,
    PathSolution,
    best_local_strategy,
    enumerate_local_resources,
    improve_path,
    route,
    sample_and_select,
)
from .metrics import PairOutcome, aggregate_by_distance, connectivity, integrity
from .network import Link, QuantumNetwork, Snapshot
from .seeding import derive_seed
from .states import (
    distill_many,
    distill_pair,
    distill_success_probability,
    entanglement,
    majorized_by,
    product_vector,
    submajorized_by,
    swap,
    swap_epsilon,
    vidal_success_probability,
)
from .strategies import (
    CatalogEntry,
    Distill,
    Leaf,
    Swap,
    evaluate,
    evaluate_unclipped,
    solve_threshold,
    standard_catalog,
)
from .topology import TopologySpec, build_topology

__version__ = "0.1.0"
