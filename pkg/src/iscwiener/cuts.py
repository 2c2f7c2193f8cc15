"""Cut method: Djoković–Winkler classes, geometric strip cuts, and the cut tables.

Naming: a *horizontal* cut is the set of vertical edges crossing one
horizontal strip ``y .. y+1``; a *vertical* cut is the set of horizontal
edges crossing one column strip ``x .. x+1``.

Record order follows the tables: horizontal cuts bottom-up with ``f_small``
counting the vertices below the strip, then vertical cuts right-to-left with
``f_small`` counting the vertices to the right of the strip.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .distances import distance_matrix
from .errors import InexactDivision, NotTwoComponents
from .lattice import Edge, SquareCellGraph, vertex_count
from .params import CaseKind, ISCParams, classify_case

HORIZONTAL_FAMILIES = ("H1", "H2", "H3")
VERTICAL_FAMILIES = ("V1", "V2", "V3", "V4", "V5")


@dataclass(frozen=True)
class CutRecord:
    family: str
    k: int
    f_small: int
    f_comp: int
    edges: Optional[int] = None  # not known for table-derived records

    @property
    def pair(self) -> tuple[int, int]:
        return tuple(sorted((self.f_small, self.f_comp)))

    @property
    def product(self) -> int:
        return self.f_small * self.f_comp


@dataclass(frozen=True)
class EdgePartition:
    classes: tuple[frozenset[Edge], ...]
    # (size of one side, size of the other) after deleting each class
    component_sizes: tuple[tuple[int, int], ...] = ()

    def canonical(self) -> frozenset[frozenset[Edge]]:
        return frozenset(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def wiener_from_cuts(cuts: Iterable[CutRecord]) -> int:
    return sum(c.f_small * c.f_comp for c in cuts)


# --- component counting ------------------------------------------------------

def _components_without(graph: SquareCellGraph, removed: set[tuple[int, int]]) -> list[int]:
    """Sizes of connected components after deleting the index-pair edges in ``removed``."""
    adj = graph.adjacency
    seen = [False] * len(adj)
    sizes = []
    for start in range(len(adj)):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        size = 0
        while stack:
            u = stack.pop()
            size += 1
            for w in adj[u]:
                if not seen[w] and (min(u, w), max(u, w)) not in removed:
                    seen[w] = True
                    stack.append(w)
        sizes.append(size)
    return sizes


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _partition_from_index_classes(
    graph: SquareCellGraph, index_classes: Sequence[Sequence[tuple[int, int]]]
) -> EdgePartition:
    vs = graph.vertices
    classes = []
    sizes = []
    for cls in index_classes:
        comps = _components_without(graph, set(cls))
        if len(comps) != 2:
            raise NotTwoComponents(
                f"removing a class of {len(cls)} edges left {len(comps)} components"
            )
        classes.append(frozenset((vs[i], vs[j]) for i, j in cls))
        sizes.append((comps[0], comps[1]))
    return EdgePartition(tuple(classes), tuple(sizes))


def theta_star_partition(graph: SquareCellGraph) -> EdgePartition:
    """Transitive closure of the Djoković–Winkler relation, computed from scratch.

    Edges ``wx`` and ``yz`` are related when
    ``d(w,y) + d(x,z) != d(w,z) + d(x,y)``. Every class is checked to split
    the graph into exactly two components.
    """
    edges = np.array(graph.edge_indices, dtype=np.int64).reshape(-1, 2)
    d = distance_matrix(graph)
    w, x = edges[:, 0], edges[:, 1]
    related = (d[np.ix_(w, w)] + d[np.ix_(x, x)]) != (d[np.ix_(w, x)] + d[np.ix_(x, w)])
    uf = _UnionFind(len(edges))
    for a, b in zip(*np.nonzero(np.triu(related, 1))):
        uf.union(int(a), int(b))
    groups: dict[int, list[tuple[int, int]]] = {}
    for e, (i, j) in enumerate(graph.edge_indices):
        groups.setdefault(uf.find(e), []).append((i, j))
    return _partition_from_index_classes(graph, list(groups.values()))


# --- geometric strips -----------------------------------------------------------

def _horizontal_strips(graph: SquareCellGraph) -> list[list[tuple[int, int]]]:
    out = []
    for y in range(graph.height - 1):
        lower, upper = graph.rows[y], graph.rows[y + 1]
        xs = range(max(lower.x_min, upper.x_min), min(lower.x_max, upper.x_max) + 1)
        out.append([(graph.index((x, y)), graph.index((x, y + 1))) for x in xs])
    return out


def _vertical_strips(graph: SquareCellGraph) -> list[tuple[int, list[tuple[int, int]]]]:
    """``(x, edges)`` for every column strip ``x .. x+1``, rightmost strip first."""
    out = []
    lo, hi = graph.x_range
    for x in range(hi - 1, lo - 1, -1):
        cls = [
            (graph.index((x, r.y)), graph.index((x + 1, r.y)))
            for r in graph.rows
            if r.x_min <= x and x + 1 <= r.x_max
        ]
        if cls:
            out.append((x, cls))
    return out


def geometric_partition(graph: SquareCellGraph) -> EdgePartition:
    strips = _horizontal_strips(graph) + [cls for _, cls in _vertical_strips(graph)]
    return _partition_from_index_classes(graph, strips)


def _family_labels(counts: Sequence[tuple[str, int]]) -> list[tuple[str, int]]:
    return [(fam, k) for fam, c in counts for k in range(1, c + 1)]


def geometric_cuts(graph: SquareCellGraph, params: Optional[ISCParams] = None) -> list[CutRecord]:
    """Cut records read off the embedding by counting vertices on each side of every strip.

    With ``params`` the records are labelled with the table families; without,
    they are labelled ``H``/``V`` with a running index.
    """
    total = graph.num_vertices
    below = []
    acc = 0
    for y, cls in enumerate(_horizontal_strips(graph)):
        acc += graph.rows[y].size
        below.append((acc, len(cls)))
    right = []
    for x, cls in _vertical_strips(graph):
        count = sum(max(0, r.x_max - max(r.x_min, x + 1) + 1) for r in graph.rows)
        right.append((count, len(cls)))

    if params is not None:
        h_labels = _family_labels(_horizontal_counts(params))
        v_labels = _family_labels([(fam, c) for fam, c, _ in _vertical_table(params)])
        if len(h_labels) != len(below) or len(v_labels) != len(right):
            raise ValueError(f"graph does not have the strip structure of {params}")
    else:
        h_labels = [("H", k) for k in range(1, len(below) + 1)]
        v_labels = [("V", k) for k in range(1, len(right) + 1)]

    return [
        CutRecord(fam, k, f, total - f, e)
        for (fam, k), (f, e) in zip(h_labels + v_labels, below + right)
    ]


# --- cut tables ------------------------------------------------------------------

def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivision(f"{num} is not divisible by {den}")
    return q


def _horizontal_counts(params: ISCParams) -> list[tuple[str, int]]:
    return [("H1", params.t), ("H2", params.m), ("H3", params.s)]


def _horizontal_table(params: ISCParams) -> list[tuple[str, int, Callable[[int], int]]]:
    p, q, m, n = params.as_tuple()
    return [
        ("H1", params.t, lambda k: p * k + k * k),
        ("H2", m, lambda k: _exact(n * n - p * p + 4 * n * k + 8 * k - 4, 4)),
        ("H3", params.s, lambda k: _exact(
            n * n - p * p + 4 * m * n + 8 * m + 4 * n * k + 8 * k - 4 * k * k - 4, 4)),
    ]


def _vertical_table(params: ISCParams) -> list[tuple[str, int, Callable[[int], int]]]:
    """``(family, range length, f(k))`` for the five vertical families of the case."""
    p, q, m, n = params.as_tuple()
    case = classify_case(params)
    if case is CaseKind.CASE1:
        counts = [(2 * m + n - q - 2) // 2, (q - p - 2 * m + 2) // 2, p,
                  (q - p + 2 * m - 2) // 2, (n - q) // 2]
        fs = [
            lambda k: k * k + k,
            lambda k: _exact(
                4 * m * m + n * n + q * q + 4 * m * n - 4 * m * q - 4 * m - 2 * n * q
                - 2 * n + 2 * q + 8 * m * k + 4 * n * k - 4 * q * k + 2 * k * k - 2 * k, 4),
            lambda k: _exact(
                2 * n * n - 4 * m * m + p * p - q * q - 4 * m * p + 4 * m * q - 4 * n * p
                + 2 * p * q - 2 * p - 2 * q + 4 * m + 4 * n + 8 * k + 8 * m * k + 8 * n * k
                - 4 * p * k - 4 * q * k, 8),
            lambda k: _exact(
                2 * n * n - 4 * m * m - 3 * p * p - q * q + 4 * m * p + 4 * n * p + 4 * m * q
                - 2 * p * q + 6 * p - 2 * q + 4 * m + 4 * n + 8 * m * k + 8 * n * k
                - 4 * p * k - 4 * q * k + 12 * k - 4 * k * k, 8),
            lambda k: _exact(
                8 * m - 2 * n + 6 * q + 4 * m * n + 2 * n * q + n * n - p * p - 2 * q * q
                - 8 + 4 * n * k - 4 * q * k + 12 * k - 4 * k * k, 4),
        ]
    elif case is CaseKind.CASE2:
        counts = [(n - p) // 2, p, (2 * m - p - q - 2) // 2, q, (n - q) // 2]
        fs = [
            lambda k: k * k + k,
            lambda k: _exact(
                n * n + p * p - 2 * n * p + 2 * n - 2 * p + 4 * n * k - 4 * p * k
                + 2 * k * k + 6 * k, 4),
            lambda k: _exact(n * n - p * p + 2 * n * p + 2 * n + 4 * p + 4 * n * k + 8 * k, 4),
            lambda k: _exact(
                n * n - p * p + 4 * m * n - 2 * n * q + 8 * m - 2 * n - 4 * q + 4 * n * k
                - 2 * k * k + 10 * k - 8, 4),
            lambda k: _exact(
                n * n - p * p + 4 * m * n + 2 * n * q + 8 * m - 2 * n + 6 * q - 2 * q * q
                + 4 * n * k - 4 * q * k - 4 * k * k + 12 * k - 8, 4),
        ]
    else:
        counts = [(n - p) // 2, (2 * m + p - q - 2) // 2, (p + q - 2 * m + 2) // 2,
                  (2 * m - p + q - 2) // 2, (n - q) // 2]
        fs = [
            lambda k: k * k + k,
            lambda k: _exact(
                n * n + p * p - 2 * n * p + 2 * n - 2 * p + 4 * n * k - 4 * p * k
                + 2 * k * k + 6 * k, 4),
            lambda k: _exact(
                4 * m * m + 2 * n * n - p * p + q * q + 8 * m * n - 4 * m * p - 4 * m * q
                - 4 * n * q + 2 * p * q + 4 * m - 4 * n + 6 * p - 2 * q + 8 * m * k
                + 8 * n * k - 4 * p * k - 4 * q * k + 8 * k - 8, 8),
            lambda k: _exact(
                2 * n * n - 4 * m * m - 3 * p * p - q * q + 4 * m * p + 4 * m * q - 2 * p * q
                + 4 * n * p + 4 * m + 4 * n + 6 * p - 2 * q + 8 * m * k + 8 * n * k
                - 4 * p * k - 4 * q * k - 4 * k * k + 12 * k, 8),
            lambda k: _exact(
                2 * n * n - 2 * p * p - 4 * q * q + 8 * m * n + 4 * n * q + 16 * m - 4 * n
                + 12 * q + 8 * n * k - 8 * q * k - 8 * k * k + 24 * k - 16, 8),
        ]
    return list(zip(VERTICAL_FAMILIES, counts, fs))


def table_cuts(params: ISCParams) -> list[CutRecord]:
    """Evaluate the cut-component tables over their ranges for the parameter case."""
    total = vertex_count(params)
    out = []
    for fam, count, f in _horizontal_table(params) + _vertical_table(params):
        for k in range(1, count + 1):
            val = f(k)
            out.append(CutRecord(fam, k, val, total - val))
    return out


def cuts_to_csv(cuts: Iterable[CutRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "k", "edge_count", "f_small", "f_comp"])
    for c in cuts:
        writer.writerow([c.family, c.k, "" if c.edges is None else c.edges, c.f_small, c.f_comp])
    return buf.getvalue()
