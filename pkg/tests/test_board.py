import itertools

import pytest
from hypothesis import given, strategies as st

from warnsdorff.board import (
    KNIGHT_DELTAS,
    MoveDelta,
    Square,
    degree,
    is_knight_delta,
    neighbors,
    on_board,
    parse_square,
    squares,
)
from warnsdorff.permutations import base_order, unrank


def brute_force_edges(n):
    """Ordered knight moves found by comparing every pair of squares."""
    cells = [(r, c) for r in range(n) for c in range(n)]
    return {
        (a, b)
        for a, b in itertools.product(cells, repeat=2)
        if sorted((abs(a[0] - b[0]), abs(a[1] - b[1]))) == [1, 2]
    }


@pytest.mark.parametrize(
    "sq, expected",
    [((0, 0), True), ((8, 0), False), ((7, 7), True), ((0, -1), False), ((3, 8), False)],
)
def test_on_board(sq, expected):
    assert on_board(Square(*sq), 8) is expected


def test_neighbors_from_corner():
    assert neighbors(Square(0, 0), base_order(), 8) == [(1, 2), (2, 1)]


def test_neighbors_center_has_eight():
    assert len(neighbors(Square(3, 3), unrank(777), 8)) == 8


def test_neighbors_from_1_1_keeps_order():
    assert neighbors(Square(1, 1), base_order(), 8) == [(2, 3), (3, 2), (3, 0), (0, 3)]


@pytest.mark.parametrize(
    "sq, visited, expected",
    [((0, 0), set(), 2), ((3, 3), set(), 8), ((0, 0), {(1, 2)}, 1)],
)
def test_degree(sq, visited, expected):
    assert degree(Square(*sq), {Square(*v) for v in visited}, 8) == expected


def test_degree_sum_matches_brute_force():
    edges = brute_force_edges(8)
    assert len(edges) == 336
    assert sum(degree(sq, set(), 8) for sq in squares(8)) == 336


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_neighbors_match_brute_force(n):
    edges = brute_force_edges(n)
    got = {(tuple(a), tuple(b)) for a in squares(n) for b in neighbors(a, KNIGHT_DELTAS, n)}
    assert got == edges


def test_knight_graph_is_undirected():
    for a in squares(8):
        for b in neighbors(a, KNIGHT_DELTAS, 8):
            assert a in neighbors(b, KNIGHT_DELTAS, 8)


def test_knight_deltas_are_the_eight_moves():
    assert len(set(KNIGHT_DELTAS)) == 8
    assert all(is_knight_delta(*d) for d in KNIGHT_DELTAS)
    assert not is_knight_delta(1, 3)
    assert not is_knight_delta(0, 0)


sq8 = st.builds(Square, st.integers(0, 7), st.integers(0, 7))


@given(sq8, st.integers(0, 40319), st.sets(sq8))
def test_degree_independent_of_order(sq, r, visited):
    order = unrank(r)
    listed = neighbors(sq, order, 8)
    assert degree(sq, visited, 8) == len(listed) - len([v for v in listed if v in visited])


@given(sq8, st.integers(0, 40319), st.permutations(range(8)))
def test_neighbors_permute_with_order(sq, r, perm):
    order = unrank(r)
    shuffled = [order[i] for i in perm]
    expected = [t for t in (Square(sq.row + d.dx, sq.col + d.dy) for d in shuffled) if on_board(t)]
    assert neighbors(sq, shuffled, 8) == expected
    assert sorted(neighbors(sq, shuffled, 8)) == sorted(neighbors(sq, order, 8))


def test_parse_square():
    assert parse_square("1,3") == Square(1, 3)
    assert str(Square(5, 0)) == "5,0"
    assert str(MoveDelta(-2, 1)) == "<-2,1>"
    for bad in ["1", "a,b", "1,2,3"]:
        with pytest.raises(ValueError):
            parse_square(bad)
