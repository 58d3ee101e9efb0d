"""Move orders: the 8! permutations of the knight deltas.

Ranks are lexicographic over *positions* in :func:`base_order`, so rank 0 is
the base order itself and rank 40319 is its reversal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence, Tuple

from .board import KNIGHT_DELTAS, MoveDelta, is_knight_delta

N_MOVES = len(KNIGHT_DELTAS)
N_ORDERS = factorial(N_MOVES)

_POSITION = {d: i for i, d in enumerate(KNIGHT_DELTAS)}
_TOKEN = re.compile(r"<(-?\d+),(-?\d+)>")


class OrderError(ValueError):
    """A move order is malformed or cannot be parsed."""


@dataclass(frozen=True)
class MoveOrder:
    deltas: Tuple[MoveDelta, ...]

    def __post_init__(self) -> None:
        deltas = tuple(MoveDelta(*d) for d in self.deltas)
        object.__setattr__(self, "deltas", deltas)
        if len(deltas) != N_MOVES:
            raise OrderError(f"move order needs {N_MOVES} deltas, got {len(deltas)}")
        seen = set()
        for d in deltas:
            if not is_knight_delta(*d):
                raise OrderError(f"not a knight move: {d}")
            if d in seen:
                raise OrderError(f"duplicate delta: {d}")
            seen.add(d)

    def __iter__(self) -> Iterator[MoveDelta]:
        return iter(self.deltas)

    def __len__(self) -> int:
        return N_MOVES

    def __getitem__(self, i: int) -> MoveDelta:
        return self.deltas[i]

    def __str__(self) -> str:
        return format_order(self)

    @property
    def indices(self) -> Tuple[int, ...]:
        """Positions of each delta within :func:`base_order`."""
        return tuple(_POSITION[d] for d in self.deltas)

    @classmethod
    def from_indices(cls, indices: Sequence[int]) -> "MoveOrder":
        return cls(tuple(KNIGHT_DELTAS[i] for i in indices))


def base_order() -> MoveOrder:
    return MoveOrder(KNIGHT_DELTAS)


def unrank_indices(r: int) -> Tuple[int, ...]:
    """Index sequence of rank ``r``; the decoding step of :func:`unrank`."""
    if isinstance(r, bool) or not isinstance(r, int) or not 0 <= r < N_ORDERS:
        raise OrderError(f"rank must be an integer in [0, {N_ORDERS}), got {r!r}")
    pool = list(range(N_MOVES))
    out = []
    for k in range(N_MOVES - 1, -1, -1):
        q, r = divmod(r, factorial(k))
        out.append(pool.pop(q))
    return tuple(out)


def unrank(r: int) -> MoveOrder:
    return MoveOrder.from_indices(unrank_indices(r))


def rank(order: MoveOrder) -> int:
    if not isinstance(order, MoveOrder):
        order = MoveOrder(tuple(order))
    pool = list(range(N_MOVES))
    r = 0
    for k, idx in zip(range(N_MOVES - 1, -1, -1), order.indices):
        q = pool.index(idx)
        r += q * factorial(k)
        pool.pop(q)
    return r


def reverse(order: MoveOrder) -> MoveOrder:
    return MoveOrder(order.deltas[::-1])


def reverse_rank(r: int) -> int:
    """Rank of ``reverse(unrank(r))``."""
    return rank(MoveOrder.from_indices(unrank_indices(r)[::-1]))


def format_order(order: MoveOrder) -> str:
    return " ".join(str(d) for d in order)


def parse_order(text: str) -> MoveOrder:
    """Parse ``"<dx,dy> <dx,dy> ..."`` into a :class:`MoveOrder`.

    Tokens must match ``<dx,dy>`` exactly; whitespace inside a token is an
    error.
    """
    tokens = text.split()
    deltas = []
    seen = set()
    for tok in tokens:
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise OrderError(f"bad token {tok!r}: expected '<dx,dy>'")
        d = MoveDelta(int(m.group(1)), int(m.group(2)))
        if not is_knight_delta(*d):
            raise OrderError(f"bad token {tok!r}: not a knight move")
        if d in seen:
            raise OrderError(f"bad token {tok!r}: duplicate delta")
        seen.add(d)
        deltas.append(d)
    if len(deltas) != N_MOVES:
        raise OrderError(f"expected {N_MOVES} tokens, got {len(deltas)} in {text!r}")
    return MoveOrder(tuple(deltas))


def all_orders() -> Iterator[Tuple[int, MoveOrder]]:
    for r in range(N_ORDERS):
        yield r, unrank(r)
