"""Board geometry and the knight-move graph.

Squares are zero-indexed ``(row, col)`` pairs. A move delta ``(dx, dy)``
adds ``dx`` to the row and ``dy`` to the column.
"""

from __future__ import annotations

from typing import AbstractSet, Iterable, List, NamedTuple


class Square(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"{self.row},{self.col}"


class MoveDelta(NamedTuple):
    dx: int
    dy: int

    def __str__(self) -> str:
        return f"<{self.dx},{self.dy}>"


def is_knight_delta(dx: int, dy: int) -> bool:
    return {abs(dx), abs(dy)} == {1, 2}


def check_size(size: int) -> int:
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise ValueError(f"board size must be a positive integer, got {size!r}")
    return size


def on_board(sq: Square, size: int = 8) -> bool:
    return 0 <= sq[0] < size and 0 <= sq[1] < size


def neighbors(sq: Square, order: Iterable[MoveDelta], size: int = 8) -> List[Square]:
    """On-board knight targets of ``sq``, in the sequence given by ``order``."""
    row, col = sq
    out = []
    for dx, dy in order:
        target = Square(row + dx, col + dy)
        if on_board(target, size):
            out.append(target)
    return out


# Canonical enumeration; rank 0 of the move-order permutations.
KNIGHT_DELTAS = (
    MoveDelta(1, 2), MoveDelta(2, 1), MoveDelta(1, -2), MoveDelta(2, -1),
    MoveDelta(-1, 2), MoveDelta(-2, 1), MoveDelta(-1, -2), MoveDelta(-2, -1),
)


def degree(sq: Square, visited: AbstractSet[Square] = frozenset(), size: int = 8) -> int:
    """Number of unvisited on-board knight neighbours of ``sq``."""
    return sum(1 for t in neighbors(sq, KNIGHT_DELTAS, size) if t not in visited)


def squares(size: int = 8) -> List[Square]:
    """All squares in row-major order."""
    return [Square(r, c) for r in range(size) for c in range(size)]


def parse_square(text: str) -> Square:
    """Parse ``"r,c"`` into a :class:`Square`."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'row,col', got {text!r}")
    try:
        return Square(int(parts[0]), int(parts[1]))
    except ValueError:
        raise ValueError(f"expected integer 'row,col', got {text!r}") from None
