"""Warnsdorff's rule with a positional tie-break.

This is the readable reference implementation, working on :class:`Square`
values and a visited set. The census runs the same rule through
:mod:`warnsdorff.kernel`, which must agree with :func:`run_tour` step for
step.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import AbstractSet, NamedTuple, Optional, Tuple

from .board import Square, check_size, degree, is_knight_delta, neighbors, on_board
from .permutations import MoveOrder, base_order


class TieBreakPolicy(enum.Enum):
    FIRST = "first"
    LAST = "last"


class TourValidationError(ValueError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"path[{index}]: {reason}")
        self.index = index


class Classification(NamedTuple):
    length: int
    hamiltonian: bool
    closed: bool


@dataclass(frozen=True)
class Tour:
    start: Square
    order: MoveOrder
    policy: TieBreakPolicy
    size: int
    path: Tuple[Square, ...]
    hamiltonian: bool
    closed: bool

    @property
    def length(self) -> int:
        return len(self.path)

    @property
    def last(self) -> Square:
        return self.path[-1]


def next_move(
    current: Square,
    visited: AbstractSet[Square],
    order: MoveOrder,
    policy: TieBreakPolicy = TieBreakPolicy.FIRST,
    size: int = 8,
) -> Optional[Square]:
    """Unvisited neighbour of ``current`` with the fewest unvisited exits.

    Ties go to the first (or last) candidate in ``order``'s enumeration.
    Returns ``None`` when every neighbour is visited.
    """
    best = None
    best_deg = None
    for cand in neighbors(current, order, size):
        if cand in visited:
            continue
        d = degree(cand, visited, size)
        if best is None or d < best_deg or (d == best_deg and policy is TieBreakPolicy.LAST):
            best, best_deg = cand, d
    return best


def _is_closed(path: Tuple[Square, ...], size: int) -> bool:
    if len(path) != size * size or len(path) < 2:
        return False
    (r0, c0), (r1, c1) = path[0], path[-1]
    return is_knight_delta(r1 - r0, c1 - c0)


def run_tour(
    start: Square,
    order: Optional[MoveOrder] = None,
    policy: TieBreakPolicy = TieBreakPolicy.FIRST,
    size: int = 8,
) -> Tour:
    check_size(size)
    start = Square(*start)
    if not on_board(start, size):
        raise ValueError(f"start {start} is off a {size}x{size} board")
    if order is None:
        order = base_order()
    visited = {start}
    path = [start]
    cur: Optional[Square] = start
    while True:
        cur = next_move(cur, visited, order, policy, size)
        if cur is None:
            break
        visited.add(cur)
        path.append(cur)
    path_t = tuple(path)
    return Tour(
        start=start,
        order=order,
        policy=policy,
        size=size,
        path=path_t,
        hamiltonian=len(path_t) == size * size,
        closed=_is_closed(path_t, size),
    )


def classify(tour: Tour) -> Classification:
    """Re-derive length/hamiltonian/closed from the path alone.

    Raises :class:`TourValidationError` at the first off-board square,
    repeated square or non-knight step.
    """
    size = tour.size
    if not tour.path:
        raise TourValidationError(0, "empty path")
    seen = set()
    prev = None
    for i, sq in enumerate(tour.path):
        if not on_board(sq, size):
            raise TourValidationError(i, f"{tuple(sq)} is off the board")
        if sq in seen:
            raise TourValidationError(i, f"{tuple(sq)} visited twice")
        if prev is not None and not is_knight_delta(sq[0] - prev[0], sq[1] - prev[1]):
            raise TourValidationError(i, f"{tuple(prev)} -> {tuple(sq)} is not a knight move")
        seen.add(sq)
        prev = sq
    path = tuple(tour.path)
    return Classification(len(path), len(path) == size * size, _is_closed(path, size))
