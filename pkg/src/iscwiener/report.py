"""Method dispatch, per-tuple reports and the verification sweep."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from .closed_form import format_decimal, mu_closed, mu_family, wiener_closed, wiener_family
from .cuts import CutRecord, geometric_cuts, table_cuts, wiener_from_cuts
from .distances import mu_from_wiener, wiener_bfs
from .lattice import SquareCellGraph, build_isc, edge_count, vertex_count
from .params import CaseKind, Family, ISCParams, classify_case, special_family_params

METHODS = ("bfs", "cuts", "tables", "closed")


def sweep_params(max_n: int, max_m: int, min_n: int = 1) -> Iterator[ISCParams]:
    """Every valid tuple with ``p <= q <= n <= max_n`` and ``m <= max_m``, in a fixed order."""
    for n in range(min_n, max_n + 1):
        for p in range(n % 2 or 2, n + 1, 2):
            for q in range(p, n + 1, 2):
                for m in range(1, max_m + 1):
                    yield ISCParams(p, q, m, n)


def wiener_by_method(method: str, params: ISCParams, graph: Optional[SquareCellGraph]) -> int:
    if method == "bfs":
        return wiener_bfs(graph or build_isc(params))[0]
    if method == "cuts":
        return wiener_from_cuts(geometric_cuts(graph or build_isc(params), params))
    if method == "tables":
        return wiener_from_cuts(table_cuts(params))
    if method == "closed":
        return wiener_closed(params)
    raise ValueError(f"unknown method {method!r}")


def timed(fn: Callable[[], object]) -> tuple[object, float]:
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


@dataclass
class IndexReport:
    params: ISCParams
    case: CaseKind
    N: int
    E: int
    wiener: dict[str, int] = field(default_factory=dict)
    mu: dict[str, Fraction] = field(default_factory=dict)
    seconds: dict[str, float] = field(default_factory=dict)
    digits: int = 12
    label: Optional[str] = None

    @property
    def agree(self) -> bool:
        return len(set(self.wiener.values())) <= 1 and len(set(self.mu.values())) <= 1

    @property
    def W(self) -> int:
        return self.wiener["bfs"] if "bfs" in self.wiener else next(iter(self.wiener.values()))

    @property
    def mu_exact(self) -> Fraction:
        return self.mu["bfs"] if "bfs" in self.mu else next(iter(self.mu.values()))

    def to_dict(self) -> dict:
        p, q, m, n = self.params.as_tuple()
        out = {
            "p": p, "q": q, "m": m, "n": n,
            "case": str(self.case),
            "N": self.N,
            "E": self.E,
            "W": str(self.W),
            "mu_exact": _fraction_str(self.mu_exact),
            "mu_decimal": format_decimal(self.mu_exact, self.digits),
            "methods": {
                name: {
                    "W": str(self.wiener[name]),
                    "mu_exact": _fraction_str(self.mu[name]),
                    "seconds": self.seconds.get(name),
                }
                for name in self.wiener
            },
        }
        return out

    def csv_rows(self) -> list[list]:
        p, q, m, n = self.params.as_tuple()
        return [
            [p, q, m, n, str(self.case), self.N, self.E, name, str(w),
             _fraction_str(self.mu[name]), format_decimal(self.mu[name], self.digits),
             f"{self.seconds.get(name, 0.0):.6f}"]
            for name, w in self.wiener.items()
        ]

    def to_text(self) -> str:
        head = self.label or str(self.params)
        lines = [
            f"{head}  [{self.case}]  N={self.N}  E={self.E}",
            f"  W  = {self.W}",
            f"  mu = {_fraction_str(self.mu_exact)} ~ {format_decimal(self.mu_exact, self.digits)}",
        ]
        for name, w in self.wiener.items():
            flag = "" if w == self.W and self.mu[name] == self.mu_exact else "  MISMATCH"
            lines.append(f"  {name:<10} W={w}  ({self.seconds.get(name, 0.0) * 1e3:.3f} ms){flag}")
        return "\n".join(lines) + "\n"


CSV_HEADER = ["p", "q", "m", "n", "case", "N", "E", "method", "W",
              "mu_exact", "mu_decimal", "seconds"]


def reports_to_csv(reports: Sequence[IndexReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerows(r.csv_rows())
    return buf.getvalue()


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def compute_report(
    params: ISCParams, methods: Sequence[str] = METHODS, digits: int = 12
) -> IndexReport:
    N = vertex_count(params)
    report = IndexReport(params, classify_case(params), N, edge_count(params), digits=digits)
    graph = None
    if any(m in ("bfs", "cuts") for m in methods):
        graph = build_isc(params)
    for method in methods:
        w, dt = timed(lambda: wiener_by_method(method, params, graph))
        report.wiener[method] = w
        report.seconds[method] = dt
        report.mu[method] = mu_closed(params) if method == "closed" else mu_from_wiener(w, N)
    return report


def family_report(family: Family, digits: int = 12, with_bfs: bool = False) -> IndexReport:
    """Report for a special family: its own closed form cross-checked by the general case polynomial."""
    params = special_family_params(family)
    report = compute_report(params, ("closed",) + (("bfs",) if with_bfs else ()), digits)
    w, dt = timed(lambda: wiener_family(family))
    report.wiener = {"family": w, **report.wiener}
    report.seconds["family"] = dt
    report.mu = {"family": mu_family(family), **report.mu}
    report.label = f"{family} = {params}"
    return report


def first_cut_difference(
    expected: Sequence[CutRecord], actual: Sequence[CutRecord]
) -> Optional[tuple[Optional[CutRecord], Optional[CutRecord]]]:
    """First position where two cut lists disagree on family, k or component sizes."""
    for a, b in zip(expected, actual):
        if (a.family, a.k, a.f_small, a.f_comp) != (b.family, b.k, b.f_small, b.f_comp):
            return a, b
    if len(expected) != len(actual):
        i = min(len(expected), len(actual))
        return (expected[i] if i < len(expected) else None,
                actual[i] if i < len(actual) else None)
    return None


@dataclass
class TupleCheck:
    params: ISCParams
    wiener: dict[str, int]
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems


def check_tuple(params: ISCParams) -> TupleCheck:
    """Run every method on one tuple and collect disagreements."""
    problems = []
    graph = build_isc(params)
    N, E = vertex_count(params), edge_count(params)
    if graph.num_vertices != N or graph.num_edges != E:
        problems.append(f"counts: built N={graph.num_vertices} E={graph.num_edges}, "
                        f"formula N={N} E={E}")
    cells = len(graph.unit_cells())
    if graph.num_edges - graph.num_vertices + 1 != cells:
        problems.append(f"euler: E-V+1={graph.num_edges - graph.num_vertices + 1} cells={cells}")

    geo = geometric_cuts(graph, params)
    tab = table_cuts(params)
    wiener = {
        "bfs": wiener_bfs(graph)[0],
        "cuts": wiener_from_cuts(geo),
        "tables": wiener_from_cuts(tab),
        "closed": wiener_closed(params),
    }
    if len(set(wiener.values())) != 1:
        problems.append("W: " + ", ".join(f"{k}={v}" for k, v in wiener.items()))
    diff = first_cut_difference(geo, tab)
    if diff is not None:
        problems.append(f"first differing cut: geometric={diff[0]} tables={diff[1]}")
    if sum(c.edges for c in geo) != graph.num_edges:
        problems.append("cut edge multiplicities do not sum to |E|")
    if mu_closed(params) != mu_from_wiener(wiener["bfs"], N):
        problems.append(f"mu: closed={mu_closed(params)} bfs={mu_from_wiener(wiener['bfs'], N)}")
    return TupleCheck(params, wiener, problems)
