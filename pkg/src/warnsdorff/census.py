"""Exhaustive census: every move order from every start square.

Work is split into fixed contiguous rank ranges, independent of the worker
count, and results are reassembled in rank order, so the summary does not
depend on how many processes ran it.
"""

from __future__ import annotations

import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import kernel
from .board import Square, check_size
from .heuristic import TieBreakPolicy
from .permutations import N_ORDERS, MoveOrder, rank, reverse_rank, unrank_indices

log = logging.getLogger(__name__)

CHUNK = 2520  # 16 chunks over 8!


@dataclass(frozen=True)
class OrderStats:
    rank: int
    failures: int
    hamiltonian_count: int
    failing_starts: Tuple[Square, ...] = ()


@dataclass(frozen=True)
class CensusSummary:
    policy: TieBreakPolicy
    size: int
    total_orders: int
    bad_orders: int
    total_tours: int
    non_hamiltonian_tours: int
    max_failures: int
    argmax_ranks: Tuple[int, ...]
    failure_histogram: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "policy": self.policy.value,
            "size": self.size,
            "total_orders": self.total_orders,
            "bad_orders": self.bad_orders,
            "total_tours": self.total_tours,
            "non_hamiltonian_tours": self.non_hamiltonian_tours,
            "max_failures": self.max_failures,
            "argmax_ranks": list(self.argmax_ranks),
            # JSON keys are strings; keep them sorted numerically
            "failure_histogram": {str(k): v for k, v in sorted(self.failure_histogram.items())},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CensusSummary":
        return cls(
            policy=TieBreakPolicy(d["policy"]),
            size=d["size"],
            total_orders=d["total_orders"],
            bad_orders=d["bad_orders"],
            total_tours=d["total_tours"],
            non_hamiltonian_tours=d["non_hamiltonian_tours"],
            max_failures=d["max_failures"],
            argmax_ranks=tuple(d["argmax_ranks"]),
            failure_histogram={int(k): v for k, v in d["failure_histogram"].items()},
        )


def failures_for_order(
    order: MoveOrder, policy: TieBreakPolicy = TieBreakPolicy.FIRST, size: int = 8
) -> OrderStats:
    check_size(size)
    starts = kernel.failing_starts(order.indices, policy is TieBreakPolicy.LAST, size)
    return OrderStats(
        rank=rank(order),
        failures=len(starts),
        hamiltonian_count=size * size - len(starts),
        failing_starts=tuple(Square(*divmod(s, size)) for s in starts),
    )


def _chunk(args: Tuple[int, int, bool, int]) -> List[int]:
    lo, hi, last, size = args
    return kernel.failures_many([unrank_indices(r) for r in range(lo, hi)], last, size)


def _ranges(ranks: range, chunk: int) -> List[Tuple[int, int]]:
    return [(lo, min(lo + chunk, ranks.stop)) for lo in range(ranks.start, ranks.stop, chunk)]


def iter_failure_chunks(
    policy: TieBreakPolicy = TieBreakPolicy.FIRST,
    size: int = 8,
    workers: int = 1,
    ranks: range = range(N_ORDERS),
    chunk: int = CHUNK,
) -> Iterator[Tuple[int, List[int]]]:
    """Yield ``(first_rank, failures)`` blocks in ascending rank order."""
    check_size(size)
    if workers < 1:
        workers = os.cpu_count() or 1
    last = policy is TieBreakPolicy.LAST
    jobs = [(lo, hi, last, size) for lo, hi in _ranges(ranks, chunk)]
    if workers == 1 or len(jobs) <= 1:
        for job in jobs:
            yield job[0], _chunk(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for job, result in zip(jobs, pool.map(_chunk, jobs)):
            yield job[0], result


def order_failure_counts(
    policy: TieBreakPolicy = TieBreakPolicy.FIRST,
    size: int = 8,
    workers: int = 1,
    ranks: range = range(N_ORDERS),
) -> List[int]:
    out: List[int] = []
    for _, block in iter_failure_chunks(policy, size, workers, ranks):
        out.extend(block)
    return out


def summarize(
    failures: Sequence[int], policy: TieBreakPolicy, size: int, first_rank: int = 0
) -> CensusSummary:
    hist = Counter(failures)
    max_f = max(hist) if hist else 0
    return CensusSummary(
        policy=policy,
        size=size,
        total_orders=len(failures),
        bad_orders=sum(1 for f in failures if f),
        total_tours=len(failures) * size * size,
        non_hamiltonian_tours=sum(failures),
        max_failures=max_f,
        argmax_ranks=tuple(first_rank + i for i, f in enumerate(failures) if f == max_f),
        failure_histogram=dict(sorted(hist.items())),
    )


def run_census(
    policy: TieBreakPolicy = TieBreakPolicy.FIRST, size: int = 8, workers: int = 1
) -> CensusSummary:
    return summarize(order_failure_counts(policy, size, workers), policy, size)


def good_order_fraction(summary: CensusSummary) -> Fraction:
    """Share of move orders with no failing start, as an exact fraction."""
    return Fraction(summary.total_orders - summary.bad_orders, summary.total_orders)


def symmetry_mismatches(
    size: int = 8, ranks: Optional[Iterable[int]] = None, workers: int = 1
) -> List[int]:
    """Ranks whose FIRST failure count differs from the reversed order's LAST count."""
    check_size(size)
    if ranks is None:
        first = order_failure_counts(TieBreakPolicy.FIRST, size, workers)
        last = order_failure_counts(TieBreakPolicy.LAST, size, workers)
        return [r for r in range(N_ORDERS) if first[r] != last[reverse_rank(r)]]
    bad = []
    for r in ranks:
        idx = unrank_indices(r)
        f = kernel.order_failures(idx, False, size)
        g = kernel.order_failures(idx[::-1], True, size)
        if f != g:
            bad.append(r)
    return bad


def symmetry_check(
    size: int = 8, ranks: Optional[Iterable[int]] = None, workers: int = 1
) -> bool:
    bad = symmetry_mismatches(size, ranks, workers)
    for r in bad:
        log.error("reversal symmetry broken at rank %d (order %s)", r, MoveOrder.from_indices(unrank_indices(r)))
    return not bad
