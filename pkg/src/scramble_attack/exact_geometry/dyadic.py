"""Dyadic cells: squares of side ``2**m`` with corners on multiples of ``2**m``.

XOR with a constant maps the integer points of such a cell onto exactly one cell of the same
size, which is what lets cells be compared across different challenges.
"""

from dataclasses import dataclass
from typing import Iterator

from scramble_attack.exact_geometry.halfplane import HalfPlane
from scramble_attack.exact_geometry.polygon import RationalConvexPolygon, floor_div


@dataclass(frozen=True, order=True)
class DyadicCell:
    """``[ix * 2**m, (ix+1) * 2**m) x [iy * 2**m, (iy+1) * 2**m)``."""

    ix: int
    iy: int
    m: int

    @property
    def side(self) -> int:
        return 1 << self.m

    @property
    def origin(self) -> tuple[int, int]:
        return self.ix << self.m, self.iy << self.m

    def halfplanes(self) -> tuple[HalfPlane, ...]:
        """Closed on the low edges, open on the high edges."""
        x0, y0 = self.origin
        return (
            HalfPlane.at_least(1, 0, x0),
            HalfPlane.at_least(0, 1, y0),
            HalfPlane.make(1, 0, x0 + self.side, closed=False),
            HalfPlane.make(0, 1, y0 + self.side, closed=False),
        )

    def xor(self, dx: int, dy: int) -> "DyadicCell":
        """The cell holding ``(x ^ dx, y ^ dy)`` for every integer point ``(x, y)`` of this cell."""
        return DyadicCell(self.ix ^ (dx >> self.m), self.iy ^ (dy >> self.m), self.m)

    def overlaps_box(self, box: tuple) -> bool:
        """Whether the closed box ``(xmin, ymin, xmax, ymax)`` meets this half-open cell."""
        x0, y0 = self.origin
        xmin, ymin, xmax, ymax = box
        return xmin < x0 + self.side and xmax >= x0 and ymin < y0 + self.side and ymax >= y0


def clip_to_cell(poly: RationalConvexPolygon, cell: DyadicCell) -> RationalConvexPolygon:
    for hp in cell.halfplanes():
        poly = poly.intersect(hp)
        if poly.is_empty:
            break
    return poly


def _index_range(low, high, m: int, limit: int) -> range:
    first = max(0, floor_div(low, 1 << m))
    last = min(limit - 1, floor_div(high, 1 << m))
    return range(first, last + 1)


def split_into_cells(
    poly: RationalConvexPolygon, m: int, half_width_bits: int
) -> Iterator[tuple[DyadicCell, RationalConvexPolygon]]:
    """Yield the nonempty fragments of ``poly`` per cell of exponent ``m``, row by row.

    Cells are limited to the ``[0, 2**half_width_bits)**2`` grid.
    """
    if poly.is_empty:
        return

    limit = 1 << (half_width_bits - m)
    side = 1 << m
    _, ymin, _, ymax = poly.bounding_box()
    for iy in _index_range(ymin, ymax, m, limit):
        band = poly.intersect(HalfPlane.at_least(0, 1, iy * side))
        band = band.intersect(HalfPlane.make(0, 1, (iy + 1) * side, closed=False))
        if band.is_empty:
            continue
        xmin, _, xmax, _ = band.bounding_box()
        for ix in _index_range(xmin, xmax, m, limit):
            cell = DyadicCell(ix, iy, m)
            fragment = band.intersect(HalfPlane.at_least(1, 0, ix * side))
            fragment = fragment.intersect(HalfPlane.make(1, 0, (ix + 1) * side, closed=False))
            if not fragment.is_empty:
                yield cell, fragment
