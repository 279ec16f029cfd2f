"""Mutable multigraph of a quantum network with provenance accounting.

Nodes are dense integers 0..n-1.  Links are immutable records; the network
tracks the set of currently alive links plus an adjacency index.  Every link
carries the set of *original* link ids it consumed, so the destruction cost
of any state is just the size of its origin set.  Swap and distill are the
only mutations; snapshots capture the alive-link table for cheap rollback.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import states

__all__ = ["Link", "Snapshot", "QuantumNetwork"]


class Link:
    """One entangled state between two distinct nodes (treat as immutable)."""

    __slots__ = ("id", "u", "v", "lam", "origin")

    def __init__(self, link_id: int, u: int, v: int, lam: float, origin: frozenset[int]):
        self.id = link_id
        self.u = u
        self.v = v
        self.lam = lam
        self.origin = origin

    def other(self, node: int) -> int:
        if node == self.u:
            return self.v
        if node == self.v:
            return self.u
        raise ValueError(f"node {node} is not an endpoint of link {self.id}")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Link({self.id}, {self.u}-{self.v}, lam={self.lam:.6g})"


@dataclass(frozen=True)
class Snapshot:
    token: int
    links: tuple[Link, ...]
    next_id: int


class QuantumNetwork:
    """Multigraph of nodes and alive link states.

    Parallel links between the same pair are permitted (they are distillation
    fodder).  ``original_count`` is fixed at construction; link ids are never
    reused, so dead links cannot resurrect.
    """

    def __init__(self, num_nodes: int, links: Iterable[tuple[int, int, float]]):
        if num_nodes < 1:
            raise ValueError("network needs at least one node")
        self.num_nodes = num_nodes
        self.links: dict[int, Link] = {}
        self.adjacency: list[dict[int, list[int]]] = [{} for _ in range(num_nodes)]
        self._next_id = 0
        original_edges = []
        for u, v, lam in links:
            self._check_node(u)
            self._check_node(v)
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            lam = states.check_schmidt(lam)
            link_id = self._next_id
            self._add(Link(link_id, u, v, lam, frozenset((link_id,))))
            original_edges.append((u, v))
        if not original_edges:
            raise ValueError("network needs at least one link")
        self.original_count = len(original_edges)
        self._original_edges: tuple[tuple[int, int], ...] = tuple(original_edges)
        self._orig_adjacency: list[list[int]] = [[] for _ in range(num_nodes)]
        for u, v in original_edges:
            self._orig_adjacency[u].append(v)
            self._orig_adjacency[v].append(u)
        self._orig_dist_cache: dict[int, list[int]] = {}

    @classmethod
    def from_links(cls, num_nodes: int, links: Iterable[tuple[int, int, float]]) -> "QuantumNetwork":
        return cls(num_nodes, links)

    # -- basic queries ----------------------------------------------------

    def _check_node(self, node: int) -> None:
        if not (0 <= node < self.num_nodes):
            raise ValueError(f"node {node} out of range 0..{self.num_nodes - 1}")

    def link(self, link_id: int) -> Link:
        try:
            return self.links[link_id]
        except KeyError:
            raise ValueError(f"link {link_id} is not alive") from None

    def alive_count(self) -> int:
        return len(self.links)

    def links_between(self, u: int, v: int) -> list[int]:
        return list(self.adjacency[u].get(v, ()))

    def destroyed_count(self, link_id: int) -> int:
        """Number of original states consumed to produce this link."""
        return len(self.link(link_id).origin)

    # -- mutation ---------------------------------------------------------

    def _add(self, link: Link) -> None:
        self.links[link.id] = link
        self.adjacency[link.u].setdefault(link.v, []).append(link.id)
        self.adjacency[link.v].setdefault(link.u, []).append(link.id)
        self._next_id = max(self._next_id, link.id + 1)

    def _remove(self, link_id: int) -> Link:
        link = self.link(link_id)
        del self.links[link_id]
        for a, b in ((link.u, link.v), (link.v, link.u)):
            ids = self.adjacency[a][b]
            ids.remove(link_id)
            if not ids:
                del self.adjacency[a][b]
        return link

    def set_initial_lambda(self, link_id: int, lam: float) -> None:
        """Overwrite the Schmidt value of an original link (disorder setup)."""
        link = self.link(link_id)
        if link.origin != frozenset((link_id,)):
            raise ValueError("only original links can be reassigned")
        self.links[link_id] = Link(link.id, link.u, link.v, states.check_schmidt(lam), link.origin)

    def apply_swap(self, l1: int, l2: int) -> int:
        """Swap two series links sharing exactly one node; returns the new link id."""
        if l1 == l2:
            raise ValueError("swap needs two distinct links")
        a = self.link(l1)
        b = self.link(l2)
        shared = {a.u, a.v} & {b.u, b.v}
        if len(shared) != 1:
            raise ValueError(
                f"links {l1} and {l2} must share exactly one endpoint, share {len(shared)}"
            )
        mid = shared.pop()
        new = Link(
            self._next_id,
            a.other(mid),
            b.other(mid),
            states.swap(a.lam, b.lam),
            a.origin | b.origin,
        )
        self._remove(l1)
        self._remove(l2)
        self._add(new)
        return new.id

    def apply_distill(self, link_ids: Sequence[int]) -> int:
        """Distill parallel links between one node pair; returns the new link id."""
        if len(link_ids) < 2:
            raise ValueError("distillation needs at least two links")
        if len(set(link_ids)) != len(link_ids):
            raise ValueError("duplicate link id in distillation")
        members = [self.link(i) for i in link_ids]
        pair = {members[0].u, members[0].v}
        for m in members[1:]:
            if {m.u, m.v} != pair:
                raise ValueError("distillation links must connect the same node pair")
        origin: frozenset[int] = frozenset()
        for m in members:
            origin |= m.origin
        new = Link(
            self._next_id,
            members[0].u,
            members[0].v,
            states.distill_many([m.lam for m in members]),
            origin,
        )
        for i in link_ids:
            self._remove(i)
        self._add(new)
        return new.id

    # -- snapshots ---------------------------------------------------------

    def snapshot(self) -> Snapshot:
        return Snapshot(id(self), tuple(self.links.values()), self._next_id)

    def restore(self, snap: Snapshot) -> None:
        if snap.token != id(self):
            raise ValueError("snapshot belongs to a different network")
        self.links = {}
        self.adjacency = [{} for _ in range(self.num_nodes)]
        for link in snap.links:
            self._add(link)
        self._next_id = snap.next_id

    # -- distances ----------------------------------------------------------

    def hop_distance(self, a: int, b: int, exclude: frozenset[int] = frozenset()) -> int | None:
        """Shortest hop count between a and b over alive links, or None."""
        self._check_node(a)
        self._check_node(b)
        if a == b:
            return 0
        seen = [False] * self.num_nodes
        seen[a] = True
        queue = deque(((a, 0),))
        while queue:
            node, dist = queue.popleft()
            for nbr, ids in self.adjacency[node].items():
                if seen[nbr]:
                    continue
                if exclude and all(i in exclude for i in ids):
                    continue
                if nbr == b:
                    return dist + 1
                seen[nbr] = True
                queue.append((nbr, dist + 1))
        return None

    def original_distances(self, target: int) -> list[int]:
        """BFS hop distances from every node to ``target`` on the original
        topology (independent of consumed links); cached per target."""
        self._check_node(target)
        cached = self._orig_dist_cache.get(target)
        if cached is not None:
            return cached
        dist = [-1] * self.num_nodes
        dist[target] = 0
        queue = deque((target,))
        while queue:
            node = queue.popleft()
            d = dist[node] + 1
            for nbr in self._orig_adjacency[node]:
                if dist[nbr] < 0:
                    dist[nbr] = d
                    queue.append(nbr)
        self._orig_dist_cache[target] = dist
        return dist
