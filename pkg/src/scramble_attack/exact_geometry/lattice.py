"""Integer points of a convex polygon, counted and enumerated row by row.

Rows at vertex ordinates are evaluated against every constraint. Between two consecutive
vertex ordinates the polygon is bounded by one left and one right constraint, so a whole
slab is counted with two floor sums.
"""

import logging
from fractions import Fraction
from itertools import pairwise
from math import ceil, floor, gcd
from typing import Iterator

import numpy as np

from scramble_attack.errors import EmptyPolygonError, EnumerationBudgetExceededError
from scramble_attack.exact_geometry.halfplane import HalfPlane
from scramble_attack.exact_geometry.lattice_sums import floor_sum
from scramble_attack.exact_geometry.polygon import RationalConvexPolygon

logger = logging.getLogger(__name__)

__all__ = ["floor_sum", "lattice_count", "lattice_points", "lattice_row_blocks", "lattice_rows", "row_interval"]

INT64_SAFE = 1 << 62


def row_interval(poly: RationalConvexPolygon, y: int) -> tuple[int, int]:
    """Integer ``x`` range ``(lo, hi)`` of row ``y``; empty when ``lo > hi``."""
    if poly.is_empty:
        raise EmptyPolygonError("row_interval of an empty polygon")

    lo: int | None = None
    hi: int | None = None
    for hp in poly.constraints:
        if hp.a > 0:
            bound = hp.x_upper(y)
            hi = bound if hi is None else min(hi, bound)
        elif hp.a < 0:
            bound = hp.x_lower(y)
            lo = bound if lo is None else max(lo, bound)
        elif not hp.row_holds(y):
            return 1, 0

    if lo is None or hi is None:
        raise EmptyPolygonError("polygon is not bounded horizontally")
    return lo, hi


def _slab_sides(poly: RationalConvexPolygon, y_mid: Fraction) -> tuple[HalfPlane, HalfPlane]:
    """Constraints bounding the polygon on the right and on the left at ordinate ``y_mid``.

    On ties (the same line, closed and open) the open one wins.
    """
    right = min((hp for hp in poly.constraints if hp.a > 0), key=lambda hp: (hp.x_at(y_mid), hp.closed))
    left = max((hp for hp in poly.constraints if hp.a < 0), key=lambda hp: (hp.x_at(y_mid), not hp.closed))
    return right, left


def _vertex_ordinates(poly: RationalConvexPolygon) -> list[Fraction]:
    return sorted({v[1] for v in poly.vertices})


def _slab_rows(y_low: Fraction, y_high: Fraction) -> tuple[int, int]:
    """First integer row strictly above ``y_low`` and the count strictly below ``y_high``."""
    first = floor(y_low) + 1
    last = ceil(y_high) - 1
    return first, max(0, last - first + 1)


def lattice_count(poly: RationalConvexPolygon) -> int:
    """Number of integer points in ``poly``, honouring open edges."""
    if poly.is_empty:
        return 0

    ordinates = _vertex_ordinates(poly)
    total = 0
    for y in ordinates:
        if y.denominator == 1:
            lo, hi = row_interval(poly, int(y))
            total += max(0, hi - lo + 1)

    for y_low, y_high in pairwise(ordinates):
        first, count = _slab_rows(y_low, y_high)
        if count == 0:
            continue
        right, left = _slab_sides(poly, (y_low + y_high) / 2)
        total += right.sum_x_upper(first, count) - left.sum_x_lower(first, count) + count

    return total


def _segment_rows(poly: RationalConvexPolygon) -> Iterator[tuple[int, int, int]]:
    # a slanted segment: x = (A*y + B) / C, rows where C divides A*y + B form a progression
    (px, py), (qx, qy) = poly.vertices
    slope = (qx - px) / (qy - py)
    intercept = px - slope * py
    A = slope.numerator * intercept.denominator
    B = intercept.numerator * slope.denominator
    C = slope.denominator * intercept.denominator

    g = gcd(A, C)
    if B % g:
        return
    modulus = C // g
    first = (-B // g) * pow(A // g, -1, modulus) % modulus if modulus > 1 else 0

    y_low, y_high = ceil(min(py, qy)), floor(max(py, qy))
    y = y_low + (first - y_low) % modulus
    while y <= y_high:
        x = (A * y + B) // C
        if poly.contains(x, y):
            yield y, x, x
        y += modulus


def lattice_rows(poly: RationalConvexPolygon) -> Iterator[tuple[int, int, int]]:
    """Yield ``(y, lo, hi)`` for every nonempty row, ascending in ``y``."""
    if poly.is_empty:
        return
    if len(poly.vertices) == 2 and poly.vertices[0][1] != poly.vertices[1][1]:
        yield from _segment_rows(poly)
        return

    ordinates = _vertex_ordinates(poly)
    for idx, y in enumerate(ordinates):
        if y.denominator == 1:
            lo, hi = row_interval(poly, int(y))
            if lo <= hi:
                yield int(y), lo, hi
        if idx + 1 == len(ordinates):
            break

        first, count = _slab_rows(y, ordinates[idx + 1])
        if count == 0:
            continue
        right, left = _slab_sides(poly, (y + ordinates[idx + 1]) / 2)
        for row in range(first, first + count):
            lo, hi = left.x_lower(row), right.x_upper(row)
            if lo <= hi:
                yield row, lo, hi


def lattice_points(poly: RationalConvexPolygon, budget: int | None = None) -> Iterator[tuple[int, int]]:
    """Yield the integer points of ``poly`` in row-major order (ascending ``y``, then ``x``).

    Raises:
        EnumerationBudgetExceededError: before yielding anything, if ``poly`` holds more than
            ``budget`` points.
    """
    if budget is not None:
        required = lattice_count(poly)
        if required > budget:
            raise EnumerationBudgetExceededError(budget=budget, required=required)

    for y, lo, hi in lattice_rows(poly):
        for x in range(lo, hi + 1):
            yield x, y


def _row_array(first: int, count: int, sides: tuple[HalfPlane, ...]) -> np.ndarray:
    """Rows ``first .. first + count - 1``; int64 when every row bound stays far from overflow."""
    extreme = max(abs(first), abs(first + count))
    worst = max(
        abs(hp.b * hp.bound.denominator) * extreme + abs(hp.bound.numerator) + abs(hp.a * hp.bound.denominator)
        for hp in sides
    )
    if worst < INT64_SAFE:
        return np.arange(first, first + count, dtype=np.int64)
    return np.array(range(first, first + count), dtype=object)


def _block(ys: list[int], los: list[int], his: list[int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return np.array(ys, dtype=np.int64), np.array(los, dtype=np.int64), np.array(his, dtype=np.int64)


def lattice_row_blocks(poly: RationalConvexPolygon) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Yield the nonempty rows of ``poly`` as int64 arrays ``(ys, los, his)``, ascending in ``y``.

    Same rows as ``lattice_rows``; each slab between vertex ordinates is one vectorised block.
    """
    if poly.is_empty:
        return
    if len(poly.vertices) == 2 and poly.vertices[0][1] != poly.vertices[1][1]:
        rows = list(_segment_rows(poly))
        if rows:
            yield _block(*map(list, zip(*rows, strict=True)))
        return

    ordinates = _vertex_ordinates(poly)
    for idx, y in enumerate(ordinates):
        if y.denominator == 1:
            lo, hi = row_interval(poly, int(y))
            if lo <= hi:
                yield _block([int(y)], [lo], [hi])
        if idx + 1 == len(ordinates):
            break

        first, count = _slab_rows(y, ordinates[idx + 1])
        if count == 0:
            continue
        right, left = _slab_sides(poly, (y + ordinates[idx + 1]) / 2)
        ys = _row_array(first, count, (right, left))
        los, his = left.x_lower(ys), right.x_upper(ys)
        keep = los <= his
        if keep.any():
            yield ys[keep].astype(np.int64), los[keep].astype(np.int64), his[keep].astype(np.int64)
