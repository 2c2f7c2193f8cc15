"""Wiener index and average distance of irregular square-cell configurations ISC(p, q, m, n)."""

from .closed_form import mu_closed, mu_family, wiener_closed, wiener_family
from .cuts import (
    CutRecord,
    EdgePartition,
    geometric_cuts,
    geometric_partition,
    table_cuts,
    theta_star_partition,
    wiener_from_cuts,
)
from .distances import DistanceDistribution, bfs_distances, mu_from_wiener, wiener_bfs
from .errors import (
    InexactDivision,
    ISCError,
    NonPositiveParameter,
    NotTwoComponents,
    OrderTooSmall,
    OrderViolation,
    ParityViolation,
    UnreachableVertex,
    ZeroDenominator,
)
from .lattice import RowInterval, SquareCellGraph, build, build_isc, edge_count, vertex_count
from .params import (
    Bitrapezium,
    CaseKind,
    Hexagonal,
    ISCParams,
    Trapezium,
    classify_case,
    special_family_params,
    validate_params,
)

__version__ = "0.1.0"
