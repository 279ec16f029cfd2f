"""Lattice generators for the four supported network topologies.

All generators are deterministic: nodes are numbered row-major and links are
sorted by endpoint pair before ids are assigned, so identical specs always
produce identical networks.  Every link starts at lambda = 1/2; the disorder
module overwrites the values afterwards.

The honeycomb lattices use a brick-wall embedding: hexagon (i, j) is the
2-wide, 1-tall brick spanning grid columns 2j+(i%2) .. 2j+2+(i%2) between grid
rows i and i+1.  A rows x cols arrangement occupies a (rows+1) x (2*cols+2)
grid minus the two corner points no brick touches, giving
2*(rows+1)*(cols+1) - 2 nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .network import QuantumNetwork

__all__ = ["TopologySpec", "TOPOLOGY_KINDS", "build_topology", "hexagon_node_sets"]

TOPOLOGY_KINDS = (
    "square",
    "diagonal-square",
    "honeycomb",
    "fully-connected-honeycomb",
)


@dataclass(frozen=True)
class TopologySpec:
    kind: str
    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.kind not in TOPOLOGY_KINDS:
            raise ValueError(f"unknown topology kind {self.kind!r}")
        if self.rows < 1 or self.cols < 1:
            raise ValueError("rows and cols must be positive")


def _square_edges(rows: int, cols: int) -> set[tuple[int, int]]:
    def node(r: int, c: int) -> int:
        return r * cols + c

    edges: set[tuple[int, int]] = set()
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.add((node(r, c), node(r, c + 1)))
            if r + 1 < rows:
                edges.add((node(r, c), node(r + 1, c)))
    return edges


def _diagonal_edges(rows: int, cols: int) -> set[tuple[int, int]]:
    def node(r: int, c: int) -> int:
        return r * cols + c

    edges = _square_edges(rows, cols)
    for r in range(rows - 1):
        for c in range(cols - 1):
            edges.add((node(r, c), node(r + 1, c + 1)))
            edges.add((node(r, c + 1), node(r + 1, c)))
    return edges


def _honeycomb_grid(rows: int, cols: int) -> tuple[dict[tuple[int, int], int], list[list[tuple[int, int]]]]:
    """Node numbering and per-hexagon grid coordinates of the brick wall."""
    width = 2 * cols + 2
    missing = {(0, width - 1)}
    missing.add((rows, 0) if rows % 2 == 0 else (rows, width - 1))
    ids: dict[tuple[int, int], int] = {}
    for r in range(rows + 1):
        for c in range(width):
            if (r, c) in missing:
                continue
            ids[(r, c)] = len(ids)
    hexagons = []
    for i in range(rows):
        for j in range(cols):
            x0 = 2 * j + (i % 2)
            hexagons.append(
                [(i, x0), (i, x0 + 1), (i, x0 + 2), (i + 1, x0), (i + 1, x0 + 1), (i + 1, x0 + 2)]
            )
    return ids, hexagons


def _honeycomb_edges(rows: int, cols: int, fully_connected: bool) -> tuple[int, set[tuple[int, int]]]:
    ids, hexagons = _honeycomb_grid(rows, cols)
    edges: set[tuple[int, int]] = set()

    def add(a: tuple[int, int], b: tuple[int, int]) -> None:
        x, y = ids[a], ids[b]
        edges.add((min(x, y), max(x, y)))

    for cell in hexagons:
        top = cell[:3]
        bottom = cell[3:]
        add(top[0], top[1])
        add(top[1], top[2])
        add(bottom[0], bottom[1])
        add(bottom[1], bottom[2])
        add(top[0], bottom[0])
        add(top[2], bottom[2])
        if fully_connected:
            for a in range(6):
                for b in range(a + 1, 6):
                    add(cell[a], cell[b])
    return len(ids), edges


def hexagon_node_sets(rows: int, cols: int) -> list[tuple[int, ...]]:
    """Node ids of each hexagon, bricks left-to-right then top-to-bottom."""
    ids, hexagons = _honeycomb_grid(rows, cols)
    return [tuple(ids[coord] for coord in cell) for cell in hexagons]


def build_topology(spec: TopologySpec) -> QuantumNetwork:
    """Build the lattice with every link initialized to lambda = 1/2."""
    if spec.kind == "square":
        num_nodes = spec.rows * spec.cols
        edges = _square_edges(spec.rows, spec.cols)
    elif spec.kind == "diagonal-square":
        num_nodes = spec.rows * spec.cols
        edges = _diagonal_edges(spec.rows, spec.cols)
    elif spec.kind == "honeycomb":
        num_nodes, edges = _honeycomb_edges(spec.rows, spec.cols, fully_connected=False)
    else:
        num_nodes, edges = _honeycomb_edges(spec.rows, spec.cols, fully_connected=True)
    links = [(u, v, 0.5) for u, v in sorted(edges)]
    return QuantumNetwork(num_nodes, links)
