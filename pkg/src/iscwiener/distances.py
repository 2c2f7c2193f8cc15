"""Brute-force distances: repeated BFS over the dense vertex index.

This is the ground truth every other method is checked against, so it is
kept deliberately plain.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import OrderTooSmall, UnreachableVertex
from .lattice import SquareCellGraph, Vertex


def _bfs(adjacency, source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    if len(queue) != len(adjacency):
        raise UnreachableVertex(
            f"{len(adjacency) - len(queue)} vertices unreachable from index {source}"
        )
    return dist


def bfs_distances(graph: SquareCellGraph, source: Vertex) -> dict[Vertex, int]:
    dist = _bfs(graph.adjacency, graph.index(source))
    return dict(zip(graph.vertices, dist))


def distance_matrix(graph: SquareCellGraph) -> np.ndarray:
    """All-pairs distances as an ``N x N`` integer array, rows in vertex-index order."""
    adj = graph.adjacency
    return np.array([_bfs(adj, s) for s in range(len(adj))], dtype=np.int64)


@dataclass(frozen=True)
class DistanceDistribution:
    """Number of unordered vertex pairs at each positive distance."""

    counts: dict[int, int] = field(default_factory=dict)

    @property
    def pairs(self) -> int:
        return sum(self.counts.values())

    @property
    def total(self) -> int:
        return sum(d * c for d, c in self.counts.items())

    @property
    def diameter(self) -> int:
        return max(self.counts, default=0)

    def to_csv(self) -> str:
        lines = ["d,count"]
        lines += [f"{d},{c}" for d, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"


def wiener_bfs(graph: SquareCellGraph) -> tuple[int, DistanceDistribution]:
    """Wiener index by BFS from every vertex, plus the distance distribution."""
    adj = graph.adjacency
    ordered = Counter()
    for s in range(len(adj)):
        ordered.update(_bfs(adj, s))
    ordered.pop(0, None)
    # each unordered pair was seen from both ends
    counts = {d: c // 2 for d, c in sorted(ordered.items())}
    dist = DistanceDistribution(counts)
    return dist.total, dist


def mu_from_wiener(wiener: int, order: int) -> Fraction:
    """Average distance ``2W / (N (N - 1))`` as a reduced fraction."""
    if order < 2:
        raise OrderTooSmall(f"average distance needs at least 2 vertices, got {order}")
    return Fraction(2 * wiener, order * (order - 1))
