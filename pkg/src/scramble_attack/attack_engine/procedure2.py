"""Procedure 2: cross-pair filtering on dyadic cells.

A piece of the first pair's set, in cell ``(ix, iy)``, can only hold the password if the
password-space cell ``(ix ^ (c1 >> m), iy ^ (c2 >> m))`` is also reached by the other pair's
set. Only the cells the current pieces map to are looked up.
"""

import logging
from typing import Iterable, Sequence

from scramble_attack.attack_engine.types import CellPiece, ChallengeResponsePair, PolygonSet
from scramble_attack.errors import InvalidParametersError
from scramble_attack.exact_geometry import DyadicCell, clip_to_cell, split_into_cells
from scramble_attack.legacy_auth.prng import ScrambleParams

logger = logging.getLogger(__name__)


def wrap_polygon_set(polygon_set: PolygonSet, params: ScrambleParams) -> list[CellPiece]:
    """One piece per polygon, each in the whole-box cell."""
    whole = DyadicCell(0, 0, params.half_width_bits)
    return [CellPiece(whole, poly, polygon_set.pair) for poly in polygon_set.polygons]


def refine_pieces(pieces: Iterable[CellPiece], m: int, params: ScrambleParams) -> list[CellPiece]:
    """Split every piece into cells of exponent ``m``."""
    refined = []
    for piece in pieces:
        if piece.cell.m < m:
            raise InvalidParametersError(f"cannot coarsen a piece at cell exponent {piece.cell.m} to {m}")
        if piece.cell.m == m:
            refined.append(piece)
            continue
        refined.extend(
            CellPiece(cell, fragment, piece.pair)
            for cell, fragment in split_into_cells(piece.fragment, m, params.half_width_bits)
        )
    return refined


class OccupancyIndex:
    """Answers "does this polygon set reach cell Q?" with a bounding-box prefilter and memoisation."""

    def __init__(self, polygon_set: PolygonSet) -> None:
        self.polygon_set = polygon_set
        self._boxes = [poly.bounding_box() for poly in polygon_set.polygons]
        self._seen: dict[DyadicCell, bool] = {}

    def occupied(self, cell: DyadicCell) -> bool:
        if cell not in self._seen:
            self._seen[cell] = any(
                cell.overlaps_box(box) and not clip_to_cell(poly, cell).is_empty
                for poly, box in zip(self.polygon_set.polygons, self._boxes, strict=True)
            )
        return self._seen[cell]

    @property
    def lookups(self) -> int:
        return len(self._seen)


def password_cell(cell: DyadicCell, pair: ChallengeResponsePair) -> DyadicCell:
    """Seed-space cell of ``pair`` to the password-space cell it covers."""
    return cell.xor(pair.challenge_hash.h1, pair.challenge_hash.h2)


def procedure2(
    current: list[CellPiece],
    current_pair: ChallengeResponsePair,
    other: PolygonSet,
    m: int,
    params: ScrambleParams,
    occupancy: OccupancyIndex | None = None,
) -> list[CellPiece]:
    """Refine ``current`` to exponent ``m`` and keep the pieces ``other`` is compatible with.

    ``occupancy`` may carry an ``OccupancyIndex`` of ``other`` kept from earlier rounds.
    """
    occupancy = occupancy or OccupancyIndex(other)
    survivors = []
    refined = refine_pieces(current, m, params)
    for piece in refined:
        target = password_cell(password_cell(piece.cell, current_pair), other.pair)
        if occupancy.occupied(target):
            survivors.append(piece)

    logger.debug(
        "cell exponent %d: %d pieces refined to %d, %d survive (%d cells looked up)",
        m,
        len(current),
        len(refined),
        len(survivors),
        occupancy.lookups,
    )
    return survivors


def cross_filter(
    current: list[CellPiece],
    current_pair: ChallengeResponsePair,
    occupancies: Sequence[OccupancyIndex],
    m: int,
    params: ScrambleParams,
) -> list[CellPiece]:
    """Refine ``current`` to exponent ``m`` and keep the pieces every indexed set reaches."""
    refined = refine_pieces(current, m, params)
    survivors = [
        piece
        for piece in refined
        if all(
            occupancy.occupied(password_cell(password_cell(piece.cell, current_pair), occupancy.polygon_set.pair))
            for occupancy in occupancies
        )
    ]
    logger.debug(
        "cell exponent %d against %d sets: %d pieces refined to %d, %d survive",
        m,
        len(occupancies),
        len(current),
        len(refined),
        len(survivors),
    )
    return survivors


def restrict_to_hash_domain(
    current: list[CellPiece], current_pair: ChallengeResponsePair, params: ScrambleParams
) -> list[CellPiece]:
    """Keep the pieces whose password-space image lies below ``2**params.hash_bits`` in both halves.

    A no-op when the hash halves fill the seed box.
    """
    bits = params.hash_bits
    if bits >= params.half_width_bits:
        return current
    return [
        piece
        for piece in refine_pieces(current, bits, params)
        if password_cell(piece.cell, current_pair) == DyadicCell(0, 0, bits)
    ]
