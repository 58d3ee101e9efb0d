"""Pure-Python census kernel; used when the compiled extension is absent.

Squares are flat indices ``row * n + col`` and orders are sequences of
positions into the canonical delta list. Look-ahead degrees are kept up to
date incrementally: landing on a square decrements the degree of each of
its neighbours.
"""

from functools import lru_cache

from .board import KNIGHT_DELTAS

NAME = "python"


@lru_cache(maxsize=None)
def _tables(n):
    """Per-square target for each canonical delta (-1 if off board), and base degrees."""
    nbr = []
    deg = []
    for r in range(n):
        for c in range(n):
            row = []
            for dx, dy in KNIGHT_DELTAS:
                rr, cc = r + dx, c + dy
                row.append(rr * n + cc if 0 <= rr < n and 0 <= cc < n else -1)
            nbr.append(tuple(row))
            deg.append(sum(1 for t in row if t >= 0))
    return tuple(nbr), tuple(deg)


def _ordered(order, n):
    nbr, _ = _tables(n)
    return [tuple(t for t in (row[k] for k in order) if t >= 0) for row in nbr]


def _walk(start, onb, deg0, last, n):
    deg = list(deg0)
    vis = [False] * (n * n)
    cur = start
    vis[cur] = True
    for t in onb[cur]:
        deg[t] -= 1
    path = [cur]
    while True:
        best = -1
        bd = 9
        for t in onb[cur]:
            if vis[t]:
                continue
            d = deg[t]
            if d < bd or (last and d == bd):
                best = t
                bd = d
        if best < 0:
            return path
        cur = best
        vis[cur] = True
        for t in onb[cur]:
            deg[t] -= 1
        path.append(cur)


def tour_path(start, order, last, n):
    return _walk(start, _ordered(order, n), _tables(n)[1], bool(last), n)


def failing_starts(order, last, n):
    onb = _ordered(order, n)
    deg0 = _tables(n)[1]
    n2 = n * n
    return [s for s in range(n2) if len(_walk(s, onb, deg0, bool(last), n)) < n2]


def order_failures(order, last, n):
    return len(failing_starts(order, last, n))


def failures_many(orders, last, n):
    return [order_failures(o, last, n) for o in orders]
