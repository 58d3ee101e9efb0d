"""Warnsdorff's knight's-tour heuristic under every move order."""

from .board import MoveDelta, Square, degree, neighbors, on_board
from .heuristic import TieBreakPolicy, Tour, classify, next_move, run_tour
from .permutations import MoveOrder, base_order, format_order, parse_order, rank, reverse, unrank

__all__ = [
    "MoveDelta",
    "MoveOrder",
    "Square",
    "TieBreakPolicy",
    "Tour",
    "base_order",
    "classify",
    "degree",
    "format_order",
    "neighbors",
    "next_move",
    "on_board",
    "parse_order",
    "rank",
    "reverse",
    "run_tour",
    "unrank",
]
