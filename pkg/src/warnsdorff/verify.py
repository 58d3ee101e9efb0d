"""Published reference values and the checks that compare against them."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, List, NamedTuple, Optional

from .board import Square
from .census import CensusSummary, failures_for_order, good_order_fraction, run_census
from .heuristic import TieBreakPolicy, run_tour
from .permutations import N_ORDERS, base_order, parse_order
from .report import tour_grid

FIG1 = [
    [1, 4, 61, 20, 41, 6, 43, 22],
    [34, 19, 2, 5, 60, 21, 40, 7],
    [3, 64, 35, 62, 37, 42, 23, 44],
    [18, 33, 48, 57, 46, 59, 8, 39],
    [49, 14, 63, 36, 55, 38, 45, 24],
    [32, 17, 56, 47, 58, 27, 54, 9],
    [13, 50, 15, 30, 11, 52, 25, 28],
    [16, 31, 12, 51, 26, 29, 10, 53],
]
FIG1_START = Square(0, 0)

FIG2 = [
    [0, 2, 19, 24, 35, 28, 17, 26],
    [20, 23, 0, 1, 18, 25, 34, 29],
    [3, 0, 21, 36, 45, 32, 27, 16],
    [22, 55, 46, 0, 42, 37, 30, 33],
    [47, 4, 59, 54, 31, 44, 15, 38],
    [60, 53, 56, 43, 50, 41, 12, 9],
    [5, 48, 51, 58, 7, 10, 39, 14],
    [52, 57, 6, 49, 40, 13, 8, 11],
]
FIG2_START = Square(1, 3)
FIG2_END = Square(5, 0)
FIG2_UNVISITED = {Square(0, 0), Square(1, 2), Square(2, 1), Square(3, 3)}

NINE_FAILURE_ORDER = "<1,2> <1,-2> <-2,-1> <2,-1> <-2,1> <-1,-2> <-1,2> <2,1>"
ZERO_FAILURE_ORDER = "<1,2> <2,1> <1,-2> <-1,2> <-2,-1> <2,-1> <-1,-2> <-2,1>"

BAD_ORDERS = 32_944
NON_HAMILTONIAN_TOURS = 78_832
TOTAL_TOURS = 2_580_480
MAX_FAILURES = 9
GOOD_FRACTION = Fraction(N_ORDERS - BAD_ORDERS, N_ORDERS)


class Check(NamedTuple):
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


def figure_checks() -> List[Check]:
    order = base_order()
    fig1 = run_tour(FIG1_START, order, TieBreakPolicy.FIRST)
    fig2 = run_tour(FIG2_START, order, TieBreakPolicy.FIRST)
    grid2 = tour_grid(fig2)
    zeros = {Square(r, c) for r in range(8) for c in range(8) if grid2[r][c] == 0}
    return [
        Check("fig1 grid", FIG1, tour_grid(fig1)),
        Check("fig1 hamiltonian/closed", (True, True), (fig1.hamiltonian, fig1.closed)),
        Check("fig2 grid", FIG2, grid2),
        Check("fig2 length", 60, fig2.length),
        Check("fig2 final square", FIG2_END, fig2.last),
        Check("fig2 unvisited squares", sorted(FIG2_UNVISITED), sorted(zeros)),
    ]


def named_order_checks() -> List[Check]:
    return [
        Check("nine-failure order", 9, failures_for_order(parse_order(NINE_FAILURE_ORDER)).failures),
        Check("zero-failure order", 0, failures_for_order(parse_order(ZERO_FAILURE_ORDER)).failures),
    ]


def census_checks(summary: CensusSummary) -> List[Check]:
    p = summary.policy.value
    return [
        Check(f"{p}: total orders", N_ORDERS, summary.total_orders),
        Check(f"{p}: bad orders", BAD_ORDERS, summary.bad_orders),
        Check(f"{p}: total tours", TOTAL_TOURS, summary.total_tours),
        Check(f"{p}: non-Hamiltonian tours", NON_HAMILTONIAN_TOURS, summary.non_hamiltonian_tours),
        Check(f"{p}: max failures", MAX_FAILURES, summary.max_failures),
        Check(f"{p}: good-order fraction", GOOD_FRACTION, good_order_fraction(summary)),
    ]


def run_checks(
    quick: bool = False,
    workers: int = 1,
    census: Optional[Callable[[TieBreakPolicy], CensusSummary]] = None,
) -> List[Check]:
    checks = figure_checks() + named_order_checks()
    if quick:
        return checks
    if census is None:
        census = lambda policy: run_census(policy, 8, workers)  # noqa: E731
    first = census(TieBreakPolicy.FIRST)
    last = census(TieBreakPolicy.LAST)
    checks += census_checks(first) + census_checks(last)
    checks.append(Check("first vs last histogram", first.failure_histogram, last.failure_histogram))
    return checks
