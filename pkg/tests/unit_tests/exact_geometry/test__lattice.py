from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scramble_attack.errors import EmptyPolygonError, EnumerationBudgetExceededError
from scramble_attack.exact_geometry import (
    EMPTY_POLYGON,
    RationalConvexPolygon,
    floor_sum,
    lattice_count,
    lattice_points,
    lattice_row_blocks,
    lattice_rows,
    row_interval,
)
from tests.geometry_strategies import brute_force_points, clipped_polygons


def test__box_counts():
    assert lattice_count(RationalConvexPolygon.from_box(0, 0, 4, 4)) == 25
    assert lattice_count(RationalConvexPolygon.from_box(0, 0, 4, 4, open_high=True)) == 16
    assert lattice_count(RationalConvexPolygon.from_box(Fraction(1, 2), 0, Fraction(7, 2), 1)) == 6


def test__triangle_count():
    assert lattice_count(RationalConvexPolygon.from_vertices([(0, 0), (4, 0), (0, 4)])) == 15


def test__slanted_segment_points():
    segment = RationalConvexPolygon.from_vertices([(0, 0), (4, 2)])
    assert lattice_count(segment) == 3
    assert list(lattice_points(segment)) == [(0, 0), (2, 1), (4, 2)]


def test__points_without_lattice_points():
    point = RationalConvexPolygon.from_vertices([(Fraction(1, 2), 0)])
    assert lattice_count(point) == 0
    assert list(lattice_rows(point)) == []
    assert lattice_count(EMPTY_POLYGON) == 0


def test__full_seed_box_is_counted_exactly():
    box = RationalConvexPolygon.from_box(0, 0, 2**32, 2**32, open_high=True)
    assert lattice_count(box) == 2**64


def test__budget_is_checked_before_enumerating():
    points = lattice_points(RationalConvexPolygon.from_box(0, 0, 4, 4), budget=10)
    with pytest.raises(EnumerationBudgetExceededError) as err:
        next(points)
    assert (err.value.budget, err.value.required) == (10, 25)


def test__row_interval_of_empty_polygon():
    with pytest.raises(EmptyPolygonError):
        row_interval(EMPTY_POLYGON, 0)


@given(st.integers(0, 40), st.integers(1, 20), st.integers(-50, 50), st.integers(-50, 50))
def test__floor_sum_matches_the_plain_sum(n: int, m: int, a: int, b: int):
    assert floor_sum(n, m, a, b) == sum((a * i + b) // m for i in range(n))


@settings(max_examples=1000)
@given(clipped_polygons())
def test__lattice_count_matches_a_bounding_box_scan(poly: RationalConvexPolygon):
    assert lattice_count(poly) == len(brute_force_points(poly))


@settings(max_examples=1000)
@given(clipped_polygons())
def test__lattice_points_are_the_scan_in_row_major_order(poly: RationalConvexPolygon):
    points = list(lattice_points(poly))
    assert points == sorted(brute_force_points(poly), key=lambda p: (p[1], p[0]))


@given(clipped_polygons(), st.integers(-50, 50), st.integers(-50, 50))
def test__integer_translation_keeps_the_count(poly: RationalConvexPolygon, dx: int, dy: int):
    assert lattice_count(poly.translate(dx, dy)) == lattice_count(poly)


def _block_rows(poly: RationalConvexPolygon) -> list[tuple[int, int, int]]:
    return [
        (y, lo, hi)
        for ys, los, his in lattice_row_blocks(poly)
        for y, lo, hi in zip(ys.tolist(), los.tolist(), his.tolist(), strict=True)
    ]


@given(clipped_polygons())
def test__row_blocks_are_the_rows(poly: RationalConvexPolygon):
    assert _block_rows(poly) == list(lattice_rows(poly))


def test__row_blocks_of_a_slanted_segment():
    segment = RationalConvexPolygon.from_vertices([(0, 0), (4, 2)])
    assert _block_rows(segment) == [(0, 0, 0), (1, 2, 2), (2, 4, 4)]


def test__row_blocks_far_from_the_origin_stay_exact():
    far = 2**61
    poly = RationalConvexPolygon.from_vertices([(0, far), (5, far + 3), (1, far + 4)])
    rows = _block_rows(poly)
    assert rows == list(lattice_rows(poly))
    assert sum(hi - lo + 1 for _, lo, hi in rows) == lattice_count(poly)
