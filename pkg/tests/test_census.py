from fractions import Fraction

import pytest

from warnsdorff.board import Square
from warnsdorff.census import (
    CensusSummary,
    _ranges,
    failures_for_order,
    good_order_fraction,
    order_failure_counts,
    run_census,
    summarize,
    symmetry_check,
    symmetry_mismatches,
)
from warnsdorff.heuristic import TieBreakPolicy, run_tour
from warnsdorff.permutations import base_order, parse_order, reverse, unrank
from warnsdorff.verify import NINE_FAILURE_ORDER, ZERO_FAILURE_ORDER

FIRST, LAST = TieBreakPolicy.FIRST, TieBreakPolicy.LAST


def test_named_orders():
    nine = failures_for_order(parse_order(NINE_FAILURE_ORDER), FIRST)
    assert (nine.failures, nine.hamiltonian_count) == (9, 55)
    zero = failures_for_order(parse_order(ZERO_FAILURE_ORDER), FIRST)
    assert (zero.failures, zero.hamiltonian_count) == (0, 64)


def test_base_order_fails_from_fig2_start():
    stats = failures_for_order(base_order(), FIRST)
    expected = tuple(s for r in range(8) for c in range(8) if not run_tour(s := Square(r, c)).hamiltonian)
    assert stats.failing_starts == expected
    assert Square(1, 3) in stats.failing_starts
    assert stats.rank == 0
    assert stats.failures == len(expected) >= 1


def test_nine_failure_order_under_reversal():
    p = parse_order(NINE_FAILURE_ORDER)
    assert failures_for_order(reverse(p), LAST).failures == 9


def test_summarize_invariants():
    failures = [0, 3, 1, 0, 3, 2]
    s = summarize(failures, FIRST, 8, first_rank=10)
    assert s.total_orders == 6
    assert s.total_tours == 6 * 64
    assert s.bad_orders == 4 == sum(v for k, v in s.failure_histogram.items() if k)
    assert s.non_hamiltonian_tours == 9 == sum(k * v for k, v in s.failure_histogram.items())
    assert s.max_failures == 3
    assert s.argmax_ranks == (11, 14)
    assert CensusSummary.from_dict(s.to_dict()) == s


@pytest.mark.parametrize(
    "bad, fraction",
    [(32944, Fraction(7376, 40320)), (0, Fraction(1)), (40320, Fraction(0))],
)
def test_good_order_fraction(bad, fraction):
    s = CensusSummary(FIRST, 8, 40320, bad, 40320 * 64, bad, 1, (), {})
    assert good_order_fraction(s) == fraction


def test_good_fraction_rounds_to_18_percent():
    assert round(float(Fraction(7376, 40320)) * 100) == 18
    assert f"{float(Fraction(7376, 40320)):.4f}" == "0.1829"


def test_ranges_are_contiguous():
    spans = _ranges(range(5, 107), 10)
    assert spans[0] == (5, 15) and spans[-1] == (105, 107)
    assert all(a[1] == b[0] for a, b in zip(spans, spans[1:]))


def test_partial_ranges_independent_of_workers():
    ranks = range(1000, 1300)
    one = order_failure_counts(FIRST, 8, 1, ranks)
    assert order_failure_counts(FIRST, 8, 3, ranks) == one
    assert len(one) == 300


def test_census_5x5():
    s = run_census(FIRST, 5, workers=2)
    assert s.total_orders == 40320
    assert s.total_tours == 25 * 40320
    assert sum(s.failure_histogram.values()) == 40320
    assert s.bad_orders <= s.non_hamiltonian_tours
    assert run_census(FIRST, 5, workers=1) == s


def test_symmetry_full_sweep_5x5():
    assert symmetry_check(5)


def test_symmetry_spot_checks():
    assert symmetry_mismatches(8, ranks=range(0, 40320, 997)) == []
    assert symmetry_check(6, ranks=[0, 17, 40319])


def test_symmetry_reports_offending_rank(monkeypatch, caplog):
    from warnsdorff import census

    real = census.kernel.order_failures
    monkeypatch.setattr(
        census.kernel, "order_failures", lambda o, last, n: real(o, last, n) + (last and tuple(o) == tuple(unrank(5).indices[::-1]))
    )
    assert symmetry_mismatches(8, ranks=[4, 5, 6]) == [5]
    assert not symmetry_check(8, ranks=[5])
    assert "rank 5" in caplog.text
