import csv
import io
import json

from hypothesis import given, settings, strategies as st

from warnsdorff.board import Square
from warnsdorff.census import summarize
from warnsdorff.heuristic import TieBreakPolicy, run_tour
from warnsdorff.permutations import unrank
from warnsdorff.report import (
    ReportDocument,
    census_report,
    parse_grid,
    render_grid,
    tour_grid,
    tour_report,
    write_census_csv,
)
from warnsdorff.verify import FIG1, FIG2


def test_fig1_text():
    text = render_grid(run_tour(Square(0, 0)))
    assert text.splitlines()[0] == " 1  4 61 20 41  6 43 22"
    assert parse_grid(text) == FIG1
    assert all(not line.endswith(" ") for line in text.splitlines())
    assert text.endswith("\n")


def test_fig2_text():
    text = render_grid(run_tour(Square(1, 3)))
    assert text.splitlines()[0] == " 0  2 19 24 35 28 17 26"
    assert parse_grid(text) == FIG2


def test_short_tour_on_2x2():
    tour = run_tour(Square(0, 0), size=2)
    assert render_grid(tour) == "1 0\n0 0\n"


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 40319), st.integers(1, 8), st.data())
def test_grid_roundtrip(r, n, data):
    start = Square(data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1)))
    tour = run_tour(start, unrank(r), TieBreakPolicy.LAST, n)
    grid = parse_grid(render_grid(tour))
    assert grid == tour_grid(tour)
    values = sorted(v for row in grid for v in row if v)
    assert values == list(range(1, tour.length + 1))
    assert sum(v == 0 for row in grid for v in row) == n * n - tour.length


def test_tour_report_roundtrip():
    doc = tour_report(run_tour(Square(1, 3)), timing={"seconds": 0.25})
    again = ReportDocument.from_json(doc.to_json())
    assert again == doc
    data = json.loads(doc.to_json())
    assert data["schema_version"] == "1"
    assert data["results"]["length"] == 60
    assert data["results"]["final_square"] == [5, 0]
    assert data["parameters"]["order"] == "<1,2> <2,1> <1,-2> <2,-1> <-1,2> <-2,1> <-1,-2> <-2,-1>"


def test_census_report_roundtrip():
    s = summarize([0, 2, 1, 2], TieBreakPolicy.LAST, 5)
    doc = census_report(s)
    assert "timing" not in json.loads(doc.to_json())
    again = ReportDocument.from_json(doc.to_json())
    assert again == doc
    assert again.results["note"].startswith("extrapolation")
    assert again.results["failure_histogram"] == {"0": 1, "1": 1, "2": 2}


def test_unknown_schema_rejected():
    import pytest

    with pytest.raises(ValueError):
        ReportDocument.from_json('{"schema_version": "99"}')


def test_csv_dump():
    out = io.StringIO()
    write_census_csv(out, [(0, "<1,2> ...", 3), (1, "<2,1> ...", 0)])
    rows = list(csv.reader(io.StringIO(out.getvalue())))
    assert rows == [["rank", "order", "failures"], ["0", "<1,2> ...", "3"], ["1", "<2,1> ...", "0"]]
