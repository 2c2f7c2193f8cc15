"""Parameter tuples for ISC(p, q, m, n) and the H / T / BT special families.

``p``, ``q`` and ``n`` count boundary *edges*: the bottom row of ISC(p, q, m, n)
holds ``p + 1`` vertices, the top row ``q + 1`` and the widest rows ``n + 1``
(or ``n + 2`` strictly inside the parallelogram).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import NonPositiveParameter, OrderViolation, ParityViolation


class CaseKind(str, enum.Enum):
    CASE1 = "Case1"  # p <= q - 2m + 2
    CASE2 = "Case2"  # p <= 2m - q - 2
    CASE3 = "Case3"  # everything else

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ISCParams:
    p: int
    q: int
    m: int
    n: int
    swapped: bool = False  # True when the caller passed p > q

    @property
    def t(self) -> int:
        """Rows in the lower trapezium above its base, (n - p) / 2."""
        return (self.n - self.p) // 2

    @property
    def s(self) -> int:
        return (self.n - self.q) // 2

    @property
    def case(self) -> CaseKind:
        return classify_case(self)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.m, self.n)

    def __str__(self) -> str:
        return f"ISC({self.p},{self.q},{self.m},{self.n})"


def validate_params(p: int, q: int, m: int, n: int) -> ISCParams:
    """Check a raw (p, q, m, n) tuple and return normalized parameters.

    Tuples with ``p > q`` are mirrored to ``(q, p, m, n)``; the two graphs are
    isomorphic under a vertical reflection.

    Raises:
        NonPositiveParameter: some parameter is below 1.
        OrderViolation: ``max(p, q) > n``.
        ParityViolation: ``n - p`` or ``n - q`` is odd.
    """
    for name, value in (("p", p), ("q", q), ("m", m), ("n", n)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise NonPositiveParameter(f"{name} must be an integer, got {value!r}")
        if value < 1:
            raise NonPositiveParameter(f"{name} must be >= 1, got {value}")
    swapped = p > q
    if swapped:
        p, q = q, p
    if q > n:
        raise OrderViolation(f"need max(p, q) <= n, got max(p, q)={q} > n={n}")
    if (n - p) % 2 or (n - q) % 2:
        raise ParityViolation(
            f"n - p and n - q must both be even, got n-p={n - p}, n-q={n - q}"
        )
    return ISCParams(p, q, m, n, swapped)


def classify_case(params: ISCParams) -> CaseKind:
    p, q, m = params.p, params.q, params.m
    if p <= q - 2 * m + 2:
        return CaseKind.CASE1
    if p <= 2 * m - q - 2:
        return CaseKind.CASE2
    return CaseKind.CASE3


@dataclass(frozen=True)
class Hexagonal:
    p: int

    def __str__(self) -> str:
        return f"H({self.p})"


@dataclass(frozen=True)
class Trapezium:
    n: int
    p: int

    def __str__(self) -> str:
        return f"T({self.n},{self.p})"


@dataclass(frozen=True)
class Bitrapezium:
    n: int
    p: int
    q: int

    def __str__(self) -> str:
        return f"BT({self.n},{self.p},{self.q})"


Family = Union[Hexagonal, Trapezium, Bitrapezium]


def special_family_params(family: Family) -> ISCParams:
    """Map H(p), T(n, p), BT(n, p, q) onto the ISC parameters they are isomorphic to."""
    if isinstance(family, Hexagonal):
        return validate_params(family.p, family.p, 1, 3 * family.p - 2)
    if isinstance(family, Trapezium):
        return validate_params(family.p, family.n, 1, family.n)
    if isinstance(family, Bitrapezium):
        return validate_params(family.p, family.q, 1, family.n)
    raise TypeError(f"unknown family {family!r}")
