"""Closed-form Wiener index and average distance of ISC(p, q, m, n) and its special families.

The three case polynomials are stored as explicit coefficient tables and
evaluated in exact integer arithmetic. Each term is
``(coefficient, exp_m, exp_n, exp_p, exp_q)``.
"""

from __future__ import annotations

from decimal import Context, Decimal
from fractions import Fraction

from .errors import InexactDivision, ZeroDenominator
from .params import (
    Bitrapezium,
    CaseKind,
    Family,
    Hexagonal,
    ISCParams,
    Trapezium,
    classify_case,
    special_family_params,
)

Term = tuple[int, int, int, int, int]

_CASE1_TERMS = (  # 79 terms, denominator 960
    (-32, 5, 0, 0, 0), (80, 4, 0, 0, 1), (320, 3, 2, 0, 0), (-80, 3, 0, 2, 0),
    (-80, 3, 0, 0, 2), (480, 2, 3, 0, 0), (-240, 2, 1, 2, 0), (-240, 2, 1, 0, 2),
    (120, 2, 0, 2, 1), (40, 2, 0, 0, 3), (280, 1, 4, 0, 0), (-240, 1, 2, 2, 0),
    (-240, 1, 2, 0, 2), (80, 1, 1, 3, 0), (80, 1, 1, 0, 3), (-10, 1, 0, 4, 0),
    (60, 1, 0, 2, 2), (-10, 1, 0, 0, 4), (56, 0, 5, 0, 0), (-80, 0, 3, 2, 0),
    (-80, 0, 3, 0, 2), (40, 0, 2, 3, 0), (40, 0, 2, 0, 3), (-10, 0, 1, 4, 0),
    (60, 0, 1, 2, 2), (-10, 0, 1, 0, 4), (4, 0, 0, 5, 0), (5, 0, 0, 4, 1),
    (-20, 0, 0, 3, 2), (-10, 0, 0, 2, 3), (5, 0, 0, 0, 5), (160, 4, 0, 0, 0),
    (1280, 3, 1, 0, 0), (-320, 3, 0, 0, 1), (1920, 2, 2, 0, 0), (-240, 2, 0, 2, 0),
    (-240, 2, 0, 0, 2), (1280, 1, 3, 0, 0), (-480, 1, 1, 2, 0), (-480, 1, 1, 0, 2),
    (160, 1, 0, 3, 0), (-240, 1, 0, 2, 1), (80, 1, 0, 0, 3), (280, 0, 4, 0, 0),
    (-240, 0, 2, 2, 0), (-240, 0, 2, 0, 2), (80, 0, 1, 3, 0), (80, 0, 1, 0, 3),
    (-10, 0, 0, 4, 0), (60, 0, 0, 2, 2), (-10, 0, 0, 0, 4), (1120, 3, 0, 0, 0),
    (1920, 2, 1, 0, 0), (240, 2, 0, 0, 1), (1680, 1, 2, 0, 0), (-80, 1, 1, 1, 0),
    (-80, 1, 1, 0, 1), (-120, 1, 0, 2, 0), (-120, 1, 0, 0, 2), (400, 0, 3, 0, 0),
    (-40, 0, 2, 1, 0), (-40, 0, 2, 0, 1), (-120, 0, 1, 2, 0), (-120, 0, 1, 0, 2),
    (-20, 0, 0, 3, 0), (80, 0, 0, 2, 1), (20, 0, 0, 1, 2), (-160, 2, 0, 0, 0),
    (320, 1, 1, 0, 0), (-160, 1, 0, 1, 0), (80, 0, 2, 0, 0), (-80, 0, 1, 1, 0),
    (-80, 0, 1, 0, 1), (40, 0, 0, 2, 0), (40, 0, 0, 0, 2), (-128, 1, 0, 0, 0),
    (-96, 0, 1, 0, 0), (16, 0, 0, 1, 0), (-80, 0, 0, 0, 1),
)
_CASE2_TERMS = (  # 64 terms, denominator 480
    (160, 3, 2, 0, 0), (240, 2, 3, 0, 0), (-120, 2, 1, 2, 0), (-120, 2, 1, 0, 2),
    (140, 1, 4, 0, 0), (-120, 1, 2, 2, 0), (-120, 1, 2, 0, 2), (40, 1, 1, 3, 0),
    (40, 1, 1, 0, 3), (60, 1, 0, 2, 2), (28, 0, 5, 0, 0), (-40, 0, 3, 2, 0),
    (-40, 0, 3, 0, 2), (20, 0, 2, 3, 0), (20, 0, 2, 0, 3), (-5, 0, 1, 4, 0),
    (30, 0, 1, 2, 2), (-5, 0, 1, 0, 4), (2, 0, 0, 5, 0), (-10, 0, 0, 3, 2),
    (-10, 0, 0, 2, 3), (2, 0, 0, 0, 5), (640, 3, 1, 0, 0), (960, 2, 2, 0, 0),
    (-240, 2, 0, 2, 0), (-240, 2, 0, 0, 2), (640, 1, 3, 0, 0), (-240, 1, 1, 2, 0),
    (-240, 1, 1, 0, 2), (80, 1, 0, 3, 0), (80, 1, 0, 0, 3), (140, 0, 4, 0, 0),
    (-120, 0, 2, 2, 0), (-120, 0, 2, 0, 2), (40, 0, 1, 3, 0), (40, 0, 1, 0, 3),
    (-10, 0, 0, 4, 0), (-10, 0, 0, 0, 4), (640, 3, 0, 0, 0), (960, 2, 1, 0, 0),
    (840, 1, 2, 0, 0), (-40, 1, 1, 1, 0), (-40, 1, 1, 0, 1), (200, 0, 3, 0, 0),
    (-20, 0, 2, 1, 0), (-20, 0, 2, 0, 1), (-60, 0, 1, 2, 0), (-60, 0, 1, 0, 2),
    (-10, 0, 0, 3, 0), (10, 0, 0, 2, 1), (10, 0, 0, 1, 2), (-10, 0, 0, 0, 3),
    (160, 1, 1, 0, 0), (-80, 1, 0, 1, 0), (-80, 1, 0, 0, 1), (40, 0, 2, 0, 0),
    (-40, 0, 1, 1, 0), (-40, 0, 1, 0, 1), (40, 0, 0, 2, 0), (40, 0, 0, 0, 2),
    (-160, 1, 0, 0, 0), (-48, 0, 1, 0, 0), (8, 0, 0, 1, 0), (8, 0, 0, 0, 1),
)
_CASE3_TERMS = (  # 96 terms, denominator 1920
    (-32, 5, 0, 0, 0), (80, 4, 0, 1, 0), (80, 4, 0, 0, 1), (640, 3, 2, 0, 0),
    (-80, 3, 0, 2, 0), (-160, 3, 0, 1, 1), (-80, 3, 0, 0, 2), (960, 2, 3, 0, 0),
    (-480, 2, 1, 2, 0), (-480, 2, 1, 0, 2), (40, 2, 0, 3, 0), (120, 2, 0, 2, 1),
    (120, 2, 0, 1, 2), (40, 2, 0, 0, 3), (560, 1, 4, 0, 0), (-480, 1, 2, 2, 0),
    (-480, 1, 2, 0, 2), (160, 1, 1, 3, 0), (160, 1, 1, 0, 3), (-10, 1, 0, 4, 0),
    (-40, 1, 0, 3, 1), (180, 1, 0, 2, 2), (-40, 1, 0, 1, 3), (-10, 1, 0, 0, 4),
    (112, 0, 5, 0, 0), (-160, 0, 3, 2, 0), (-160, 0, 3, 0, 2), (80, 0, 2, 3, 0),
    (80, 0, 2, 0, 3), (-20, 0, 1, 4, 0), (120, 0, 1, 2, 2), (-20, 0, 1, 0, 4),
    (9, 0, 0, 5, 0), (5, 0, 0, 4, 1), (-30, 0, 0, 3, 2), (-30, 0, 0, 2, 3),
    (5, 0, 0, 1, 4), (9, 0, 0, 0, 5), (160, 4, 0, 0, 0), (2560, 3, 1, 0, 0),
    (-320, 3, 0, 1, 0), (-320, 3, 0, 0, 1), (3840, 2, 2, 0, 0), (-720, 2, 0, 2, 0),
    (480, 2, 0, 1, 1), (-720, 2, 0, 0, 2), (2560, 1, 3, 0, 0), (-960, 1, 1, 2, 0),
    (-960, 1, 1, 0, 2), (240, 1, 0, 3, 0), (-240, 1, 0, 2, 1), (-240, 1, 0, 1, 2),
    (240, 1, 0, 0, 3), (560, 0, 4, 0, 0), (-480, 0, 2, 2, 0), (-480, 0, 2, 0, 2),
    (160, 0, 1, 3, 0), (160, 0, 1, 0, 3), (-30, 0, 0, 4, 0), (40, 0, 0, 3, 1),
    (60, 0, 0, 2, 2), (40, 0, 0, 1, 3), (-30, 0, 0, 0, 4), (2400, 3, 0, 0, 0),
    (3840, 2, 1, 0, 0), (240, 2, 0, 1, 0), (240, 2, 0, 0, 1), (3360, 1, 2, 0, 0),
    (-160, 1, 1, 1, 0), (-160, 1, 1, 0, 1), (-120, 1, 0, 2, 0), (-240, 1, 0, 1, 1),
    (-120, 1, 0, 0, 2), (800, 0, 3, 0, 0), (-80, 0, 2, 1, 0), (-80, 0, 2, 0, 1),
    (-240, 0, 1, 2, 0), (-240, 0, 1, 0, 2), (-20, 0, 0, 3, 0), (100, 0, 0, 2, 1),
    (100, 0, 0, 1, 2), (-20, 0, 0, 0, 3), (-160, 2, 0, 0, 0), (640, 1, 1, 0, 0),
    (-160, 1, 0, 1, 0), (-160, 1, 0, 0, 1), (160, 0, 2, 0, 0), (-160, 0, 1, 1, 0),
    (-160, 0, 1, 0, 1), (120, 0, 0, 2, 0), (-80, 0, 0, 1, 1), (120, 0, 0, 0, 2),
    (-448, 1, 0, 0, 0), (-192, 0, 1, 0, 0), (-64, 0, 0, 1, 0), (-64, 0, 0, 0, 1),
)

# (terms, Wiener denominator, leading factor c of the average-distance
# denominator c * D * (D - 4) with D = 8m + 4n + 4mn + 2n^2 - p^2 - q^2)
CASE_POLYNOMIALS: dict[CaseKind, tuple[tuple[Term, ...], int, int]] = {
    CaseKind.CASE1: (_CASE1_TERMS, 960, 30),
    CaseKind.CASE2: (_CASE2_TERMS, 480, 15),
    CaseKind.CASE3: (_CASE3_TERMS, 1920, 60),
}


def evaluate_terms(terms, m: int, n: int, p: int, q: int) -> int:
    mp = [m**i for i in range(6)]
    np_ = [n**i for i in range(6)]
    pp = [p**i for i in range(6)]
    qp = [q**i for i in range(6)]
    return sum(c * mp[a] * np_[b] * pp[e] * qp[f] for c, a, b, e, f in terms)


def _exact(num: int, den: int) -> int:
    if den == 0:
        raise ZeroDenominator("zero denominator")
    quot, rem = divmod(num, den)
    if rem:
        raise InexactDivision(f"{num} is not divisible by {den}")
    return quot


def wiener_numerator(params: ISCParams) -> tuple[int, int]:
    """The case polynomial value and its denominator, before division."""
    terms, den, _ = CASE_POLYNOMIALS[classify_case(params)]
    return evaluate_terms(terms, params.m, params.n, params.p, params.q), den


def wiener_closed(params: ISCParams) -> int:
    num, den = wiener_numerator(params)
    return _exact(num, den)


def size_factor(params: ISCParams) -> int:
    """``8m + 4n + 4mn + 2n^2 - p^2 - q^2``, four times the vertex count."""
    p, q, m, n = params.as_tuple()
    return 8 * m + 4 * n + 4 * m * n + 2 * n * n - p * p - q * q


def mu_closed(params: ISCParams) -> Fraction:
    terms, den, lead = CASE_POLYNOMIALS[classify_case(params)]
    num = evaluate_terms(terms, params.m, params.n, params.p, params.q)
    _exact(num, den)
    d = size_factor(params)
    denom = lead * d * (d - 4)
    if denom == 0:
        raise ZeroDenominator(f"{params} has fewer than two vertices")
    return Fraction(num, denom)


# --- special families -----------------------------------------------------------

def _trapezium_poly(n: int, p: int) -> int:
    return (
        11 * n**5 + 220 * n**4 - 30 * n**3 * p**2 + 1400 * n**3
        + n**2 * (20 * p**3 - 360 * p**2 - 20 * p + 3440)
        + n * (-5 * p**4 + 160 * p**3 - 880 * p**2 - 160 * p + 3344)
        + 4 * p**5 - 20 * p**4 + 140 * p**3 - 400 * p**2 - 144 * p + 960
    )


def _bitrapezium_poly(n: int, p: int, q: int) -> int:
    return (
        56 * n**5 + 560 * n**4 - 80 * n**3 * p**2 - 80 * n**3 * q**2 + 2160 * n**3
        + 40 * n**2 * p**3 - 480 * n**2 * p**2 - 40 * n**2 * p
        + 40 * n**2 * q**3 - 480 * n**2 * q**2 - 40 * n**2 * q + 4000 * n**2
        - 10 * n * p**4 + 160 * n * p**3 + 60 * n * p**2 * q**2 - 840 * n * p**2 - 160 * n * p
        - 10 * n * q**4 + 160 * n * q**3 - 840 * n * q**2 - 160 * n * q + 3424 * n
        + 4 * p**5 + 5 * p**4 * q - 20 * p**4 - 20 * p**3 * q**2 + 140 * p**3
        - 10 * p**2 * q**3 + 120 * p**2 * q**2 - 40 * p**2 * q - 400 * p**2
        + 20 * p * q**2 - 144 * p
        + 5 * q**5 - 20 * q**4 + 120 * q**3 - 400 * q**2 - 80 * q + 960
    )


def wiener_family(family: Family) -> int:
    """Wiener index of H(p), T(n, p) or BT(n, p, q) from its own closed form.

    Arguments are validated through :func:`special_family_params`; for BT the
    two trapezium widths are ordered so that ``p <= q``.
    """
    params = special_family_params(family)
    if isinstance(family, Hexagonal):
        p = family.p
        return _exact(158 * p**5 - 35 * p**3 - 3 * p, 15)
    if isinstance(family, Trapezium):
        return _exact(_trapezium_poly(family.n, family.p), 960)
    if isinstance(family, Bitrapezium):
        return _exact(_bitrapezium_poly(params.n, params.p, params.q), 960)
    raise TypeError(f"unknown family {family!r}")


def mu_family(family: Family) -> Fraction:
    params = special_family_params(family)
    if isinstance(family, Hexagonal):
        p = family.p
        num, den = 158 * p**4 - 35 * p**2 - 3, 120 * p**3 - 30 * p
    elif isinstance(family, Trapezium):
        n, p = family.n, family.p
        core = n * n + 8 * n - p * p
        num, den = _trapezium_poly(n, p), 30 * (core + 4) * (core + 8)
    elif isinstance(family, Bitrapezium):
        n, p, q = params.n, params.p, params.q
        core = 2 * n * n + 8 * n - p * p - q * q
        num, den = _bitrapezium_poly(n, p, q), 30 * (core + 4) * (core + 8)
    else:
        raise TypeError(f"unknown family {family!r}")
    if den == 0:
        raise ZeroDenominator(f"{family} has a zero average-distance denominator")
    return Fraction(num, den)


def ladder_wiener(p: int) -> int:
    """Wiener index of the 2 x (p + 1) ladder, i.e. T(p, p)."""
    return (p + 1) * (2 * p + 1) * (p + 3) // 3


def format_decimal(value: Fraction, digits: int = 12) -> str:
    """Render a fraction with ``digits`` significant digits."""
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(value.numerator), Decimal(value.denominator)))
