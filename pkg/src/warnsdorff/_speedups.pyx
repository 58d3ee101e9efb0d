# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel. Same interface and semantics as ``_purekernel``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

NAME = "cython"

cdef int DR[8]
cdef int DC[8]
DR[:] = [1, 2, 1, 2, -1, -2, -1, -2]
DC[:] = [2, 1, -2, -1, 2, 1, -2, -1]


cdef struct Board:
    int n
    int n2
    int *onb      # n2 * 8 ordered neighbour targets
    int *cnt      # n2 neighbour counts
    int *deg0     # n2 initial degrees
    int *deg      # n2 scratch
    char *vis     # n2 scratch
    int *path     # n2 scratch


cdef int board_alloc(Board *b, int n) except -1:
    b.n = n
    b.n2 = n * n
    b.onb = <int *> malloc(b.n2 * 8 * sizeof(int))
    b.cnt = <int *> malloc(b.n2 * sizeof(int))
    b.deg0 = <int *> malloc(b.n2 * sizeof(int))
    b.deg = <int *> malloc(b.n2 * sizeof(int))
    b.vis = <char *> malloc(b.n2 * sizeof(char))
    b.path = <int *> malloc(b.n2 * sizeof(int))
    if not (b.onb and b.cnt and b.deg0 and b.deg and b.vis and b.path):
        board_free(b)
        raise MemoryError()
    return 0


cdef void board_free(Board *b) noexcept:
    free(b.onb)
    free(b.cnt)
    free(b.deg0)
    free(b.deg)
    free(b.vis)
    free(b.path)
    b.onb = NULL
    b.cnt = NULL
    b.deg0 = NULL
    b.deg = NULL
    b.vis = NULL
    b.path = NULL


cdef void board_set_order(Board *b, const int *order) noexcept nogil:
    cdef int n = b.n, sq, r, c, k, rr, cc, m
    for sq in range(b.n2):
        r = sq // n
        c = sq % n
        m = 0
        for k in range(8):
            rr = r + DR[order[k]]
            cc = c + DC[order[k]]
            if 0 <= rr < n and 0 <= cc < n:
                b.onb[sq * 8 + m] = rr * n + cc
                m += 1
        b.cnt[sq] = m
        b.deg0[sq] = m


cdef int walk(Board *b, int start, bint last) noexcept nogil:
    """Run one tour into ``b.path``; returns its length."""
    cdef int cur = start, best, bd, d, t, j, length = 1
    cdef int *nb
    memcpy(b.deg, b.deg0, b.n2 * sizeof(int))
    memset(b.vis, 0, b.n2)
    b.vis[cur] = 1
    b.path[0] = cur
    nb = b.onb + cur * 8
    for j in range(b.cnt[cur]):
        b.deg[nb[j]] -= 1
    while True:
        best = -1
        bd = 9
        for j in range(b.cnt[cur]):
            t = nb[j]
            if b.vis[t]:
                continue
            d = b.deg[t]
            if d < bd or (last and d == bd):
                best = t
                bd = d
        if best < 0:
            return length
        cur = best
        b.vis[cur] = 1
        b.path[length] = cur
        length += 1
        nb = b.onb + cur * 8
        for j in range(b.cnt[cur]):
            b.deg[nb[j]] -= 1


cdef int load_order(int *buf, object order) except -1:
    cdef int k
    seq = tuple(order)
    if len(seq) != 8 or sorted(seq) != list(range(8)):
        raise ValueError(f"order must be a permutation of range(8), got {seq!r}")
    for k in range(8):
        buf[k] = seq[k]
    return 0


cdef int check_args(int n) except -1:
    if n < 1:
        raise ValueError(f"board size must be positive, got {n}")
    return 0


def tour_path(int start, order, bint last, int n):
    cdef Board b
    cdef int buf[8]
    cdef int length, i
    check_args(n)
    if not 0 <= start < n * n:
        raise ValueError(f"start index {start} out of range")
    load_order(buf, order)
    board_alloc(&b, n)
    try:
        board_set_order(&b, buf)
        length = walk(&b, start, last)
        return [b.path[i] for i in range(length)]
    finally:
        board_free(&b)


def failing_starts(order, bint last, int n):
    cdef Board b
    cdef int buf[8]
    cdef int s
    check_args(n)
    load_order(buf, order)
    board_alloc(&b, n)
    out = []
    try:
        board_set_order(&b, buf)
        for s in range(b.n2):
            if walk(&b, s, last) < b.n2:
                out.append(s)
    finally:
        board_free(&b)
    return out


def order_failures(order, bint last, int n):
    return len(failing_starts(order, last, n))


def failures_many(orders, bint last, int n):
    cdef Board b
    cdef int buf[8]
    cdef int s, f
    check_args(n)
    board_alloc(&b, n)
    out = []
    try:
        for order in orders:
            load_order(buf, order)
            with nogil:
                board_set_order(&b, buf)
                f = 0
                for s in range(b.n2):
                    if walk(&b, s, last) < b.n2:
                        f += 1
            out.append(f)
    finally:
        board_free(&b)
    return out
