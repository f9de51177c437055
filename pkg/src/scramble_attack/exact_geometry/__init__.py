"""Exact rational convex geometry in the plane.

Everything here is integer or ``Fraction`` arithmetic; no predicate ever needs an epsilon.
"""

from .dyadic import DyadicCell, clip_to_cell, split_into_cells
from .halfplane import HalfPlane
from .lattice import floor_sum, lattice_count, lattice_points, lattice_row_blocks, lattice_rows, row_interval
from .polygon import EMPTY_POLYGON, RationalConvexPolygon, area, functional_range, intersect_halfplane, translate

__all__ = [
    "EMPTY_POLYGON",
    "DyadicCell",
    "HalfPlane",
    "RationalConvexPolygon",
    "area",
    "clip_to_cell",
    "floor_sum",
    "functional_range",
    "intersect_halfplane",
    "lattice_count",
    "lattice_points",
    "lattice_row_blocks",
    "lattice_rows",
    "row_interval",
    "split_into_cells",
    "translate",
]
