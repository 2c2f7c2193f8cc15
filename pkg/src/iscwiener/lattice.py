"""Row-interval representation of square-lattice subgraphs and the ISC construction."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .params import ISCParams, validate_params

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class RowInterval:
    y: int
    x_min: int
    x_max: int

    def __post_init__(self):
        if self.x_min > self.x_max:
            raise ValueError(f"empty row interval {self}")

    @property
    def size(self) -> int:
        return self.x_max - self.x_min + 1

    def __contains__(self, x: int) -> bool:
        return self.x_min <= x <= self.x_max


@dataclass(frozen=True)
class SquareCellGraph:
    """Induced subgraph of the square lattice given by one x-interval per row.

    Row ``i`` of ``rows`` sits at height ``y = i``. Vertices are indexed densely
    in row-major order, ``(y, x)`` ascending.
    """

    rows: tuple[RowInterval, ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("a square-cell graph needs at least one row")
        for i, row in enumerate(self.rows):
            if row.y != i:
                raise ValueError(f"row {i} has y={row.y}; rows must be numbered 0, 1, ...")
        for lower, upper in zip(self.rows, self.rows[1:]):
            if min(lower.x_max, upper.x_max) < max(lower.x_min, upper.x_min):
                raise ValueError(f"rows {lower.y} and {upper.y} do not overlap")

    @classmethod
    def from_intervals(cls, intervals: Sequence[tuple[int, int]]) -> SquareCellGraph:
        return cls(tuple(RowInterval(y, a, b) for y, (a, b) in enumerate(intervals)))

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for row in self.rows:
            out.append(out[-1] + row.size)
        return tuple(out)

    @property
    def num_vertices(self) -> int:
        return self.offsets[-1]

    @cached_property
    def num_edges(self) -> int:
        horizontal = sum(row.size - 1 for row in self.rows)
        return horizontal + sum(
            self._overlap(y) for y in range(len(self.rows) - 1)
        )

    def _overlap(self, y: int) -> int:
        lower, upper = self.rows[y], self.rows[y + 1]
        return min(lower.x_max, upper.x_max) - max(lower.x_min, upper.x_min) + 1

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def x_range(self) -> tuple[int, int]:
        return min(r.x_min for r in self.rows), max(r.x_max for r in self.rows)

    def __contains__(self, v: Vertex) -> bool:
        x, y = v
        return 0 <= y < len(self.rows) and x in self.rows[y]

    def index(self, v: Vertex) -> int:
        if v not in self:
            raise KeyError(v)
        x, y = v
        return self.offsets[y] + x - self.rows[y].x_min

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple((x, r.y) for r in self.rows for x in range(r.x_min, r.x_max + 1))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for i, j in self.edge_indices:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_indices(self) -> tuple[tuple[int, int], ...]:
        """All edges as ``(i, j)`` index pairs with ``i < j``."""
        out = []
        for row in self.rows:
            base = self.offsets[row.y]
            out.extend((base + k, base + k + 1) for k in range(row.size - 1))
            if row.y + 1 < len(self.rows):
                up = self.rows[row.y + 1]
                for x in range(max(row.x_min, up.x_min), min(row.x_max, up.x_max) + 1):
                    out.append((base + x - row.x_min, self.offsets[row.y + 1] + x - up.x_min))
        return tuple(out)

    def edges(self) -> Iterator[Edge]:
        vs = self.vertices
        for i, j in self.edge_indices:
            yield vs[i], vs[j]

    def neighbors(self, v: Vertex) -> list[Vertex]:
        return [self.vertices[j] for j in self.adjacency[self.index(v)]]

    def unit_cells(self) -> list[Vertex]:
        """Lower-left corners of lattice squares whose four corners are all present."""
        cells = []
        for y in range(len(self.rows) - 1):
            lower, upper = self.rows[y], self.rows[y + 1]
            lo = max(lower.x_min, upper.x_min)
            hi = min(lower.x_max, upper.x_max)
            cells.extend((x, y) for x in range(lo, hi))
        return cells

    def column_gaps(self) -> list[int]:
        """Values x such that some horizontal edge joins column x to column x + 1."""
        return sorted({x for r in self.rows for x in range(r.x_min, r.x_max)})

    def mirrored(self) -> SquareCellGraph:
        """Reflection in a horizontal line (row order reversed)."""
        return SquareCellGraph.from_intervals([(r.x_min, r.x_max) for r in reversed(self.rows)])

    def to_adjlist(self) -> str:
        lines = []
        for v in self.vertices:
            nbrs = sorted(self.neighbors(v), key=lambda u: (u[1], u[0]))
            lines.append(f"{v[0]},{v[1]}: " + " ".join(f"{x},{y}" for x, y in nbrs))
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "ISC") -> str:
        def vid(v: Vertex) -> str:
            # negative x would make a bare ID illegal, so always quote
            return f'"v_{v[0]}_{v[1]}"'

        lines = [f"graph {name} {{"]
        lines.extend(f"  {vid(v)} [pos=\"{v[0]},{v[1]}!\"];" for v in self.vertices)
        lines.extend(f"  {vid(a)} -- {vid(b)};" for a, b in self.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"


def isc_rows(p: int, q: int, m: int, n: int) -> list[tuple[int, int]]:
    """Row intervals of the canonical ISC embedding, bottom row first.

    No ordering between ``p`` and ``q`` is assumed, so this also produces the
    unnormalized ``p > q`` shape. ``n - p`` and ``n - q`` must be even.
    """
    t, s = (n - p) // 2, (n - q) // 2
    rows = [(t - y, t + p + y) for y in range(t + 1)]
    rows += [(-(y - t), n - (y - t) + 1) for y in range(t + 1, t + m)]
    rows.append((-(m - 1), n - m + 1))
    rows += [(-(m - 1) + j, n - m + 1 - j) for j in range(1, s + 1)]
    return rows


def build_isc(params: ISCParams) -> SquareCellGraph:
    return SquareCellGraph.from_intervals(isc_rows(params.p, params.q, params.m, params.n))


def build(p: int, q: int, m: int, n: int) -> SquareCellGraph:
    """Validate and build in one step."""
    return build_isc(validate_params(p, q, m, n))


def vertex_count(params: ISCParams) -> int:
    p, q, m, n = params.as_tuple()
    num = 2 * n * n - p * p - q * q + 4 * m * n + 8 * m + 4 * n
    assert num % 4 == 0
    return num // 4


def edge_count(params: ISCParams) -> int:
    p, q, m, n = params.as_tuple()
    num = 2 * n * n - p * p - q * q + 4 * m * n + 4 * m + p + q - 2
    assert num % 2 == 0
    return num // 2
