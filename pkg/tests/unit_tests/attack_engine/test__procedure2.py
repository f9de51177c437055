import pytest

from scramble_attack.attack_engine.procedure2 import (
    OccupancyIndex,
    cross_filter,
    password_cell,
    procedure2,
    refine_pieces,
    restrict_to_hash_domain,
    wrap_polygon_set,
)
from scramble_attack.attack_engine.types import CellPiece, ChallengeResponsePair, PolygonSet
from scramble_attack.errors import InvalidParametersError
from scramble_attack.exact_geometry import DyadicCell, RationalConvexPolygon, lattice_count, split_into_cells
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.types import HashHalves, Response
from tests.consts import TOY_CELL_EXPONENTS


def _summary(pieces: list[CellPiece]) -> list[tuple]:
    return sorted((piece.cell, piece.fragment.key) for piece in pieces)


def _points(pieces: list[CellPiece]) -> int:
    return sum(lattice_count(piece.fragment) for piece in pieces)


def test__wrap_puts_every_polygon_in_the_whole_box(toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams):
    pieces = wrap_polygon_set(toy_polygon_sets[0], toy_params)
    assert len(pieces) == len(toy_polygon_sets[0])
    assert {piece.cell for piece in pieces} == {DyadicCell(0, 0, toy_params.half_width_bits)}


def test__refining_keeps_the_points(toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams):
    pieces = wrap_polygon_set(toy_polygon_sets[0], toy_params)
    for m in TOY_CELL_EXPONENTS:
        pieces = refine_pieces(pieces, m, toy_params)
        assert all(piece.cell.m == m for piece in pieces)
        assert _points(pieces) == toy_polygon_sets[0].lattice_count()


def test__refining_cannot_coarsen(toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams):
    pieces = refine_pieces(wrap_polygon_set(toy_polygon_sets[0], toy_params), 4, toy_params)
    with pytest.raises(InvalidParametersError):
        refine_pieces(pieces, 6, toy_params)


def test__password_cell_undoes_the_challenge():
    cell = DyadicCell(3, 5, 4)
    pair = ChallengeResponsePair(HashHalves(0x120, 0x0F0), Response(b"@" * 8))
    assert password_cell(cell, pair) == DyadicCell(3 ^ 0x12, 5 ^ 0x0F, 4)
    assert password_cell(password_cell(cell, pair), pair) == cell


def test__filtering_against_itself_keeps_every_piece(toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams):
    polygon_set = toy_polygon_sets[0]
    pieces = wrap_polygon_set(polygon_set, toy_params)
    survivors = procedure2(pieces, polygon_set.pair, polygon_set, 6, toy_params)
    assert _summary(survivors) == _summary(refine_pieces(pieces, 6, toy_params))


def test__probing_matches_a_full_occupancy_map(toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams):
    base, other = toy_polygon_sets[0], toy_polygon_sets[1]
    m = 6
    occupied = {
        password_cell(cell, other.pair)
        for poly in other.polygons
        for cell, _ in split_into_cells(poly, m, toy_params.half_width_bits)
    }
    refined = refine_pieces(wrap_polygon_set(base, toy_params), m, toy_params)
    expected = [piece for piece in refined if password_cell(piece.cell, base.pair) in occupied]

    survivors = procedure2(wrap_polygon_set(base, toy_params), base.pair, other, m, toy_params)
    assert _summary(survivors) == _summary(expected)


def test__the_password_piece_always_survives(
    toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams, toy_truth: HashHalves
):
    base = toy_polygon_sets[0]
    x, y = base.pair.seeds_for(toy_truth)
    pieces = wrap_polygon_set(base, toy_params)
    points = _points(pieces)
    for other, m in zip(toy_polygon_sets[1:], TOY_CELL_EXPONENTS, strict=False):
        pieces = procedure2(pieces, base.pair, other, m, toy_params)
        assert any(piece.fragment.contains(x, y) for piece in pieces)
        assert _points(pieces) <= points
        points = _points(pieces)


def test__occupancy_lookups_are_memoised(toy_polygon_sets: list[PolygonSet]):
    index = OccupancyIndex(toy_polygon_sets[1])
    cell = DyadicCell(0, 0, 4)
    first = index.occupied(cell)
    assert index.occupied(cell) == first
    assert index.lookups == 1


def test__cross_filter_with_one_set_is_procedure2(toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams):
    base, other = toy_polygon_sets[0], toy_polygon_sets[1]
    pieces = wrap_polygon_set(base, toy_params)
    single = procedure2(pieces, base.pair, other, 6, toy_params)
    crossed = cross_filter(pieces, base.pair, [OccupancyIndex(other)], 6, toy_params)
    assert _summary(crossed) == _summary(single)


def test__cross_filter_keeps_what_every_set_keeps(
    toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams, toy_truth: HashHalves
):
    base, others = toy_polygon_sets[0], toy_polygon_sets[1:]
    pieces = wrap_polygon_set(base, toy_params)
    for m in TOY_CELL_EXPONENTS:
        crossed = cross_filter(pieces, base.pair, [OccupancyIndex(other) for other in others], m, toy_params)
        each = [set(_summary(procedure2(pieces, base.pair, other, m, toy_params))) for other in others]
        assert set(_summary(crossed)) == set.intersection(*each)

        x, y = base.pair.seeds_for(toy_truth)
        assert any(piece.fragment.contains(x, y) for piece in crossed)


def test__hash_domain_is_the_whole_toy_box(toy_polygon_sets: list[PolygonSet], toy_params: ScrambleParams):
    pieces = wrap_polygon_set(toy_polygon_sets[0], toy_params)
    assert restrict_to_hash_domain(pieces, toy_polygon_sets[0].pair, toy_params) is pieces


def test__hash_domain_keeps_the_31_bit_quarter(engine_params: ScrambleParams):
    side = engine_params.box_side
    pair = ChallengeResponsePair(HashHalves(0x80000000, 0x1234), Response(b"@" * 8))
    box = RationalConvexPolygon.from_box(0, 0, side, side, open_high=True)
    pieces = [CellPiece(DyadicCell(0, 0, engine_params.half_width_bits), box, pair)]

    kept = restrict_to_hash_domain(pieces, pair, engine_params)
    assert [piece.cell for piece in kept] == [DyadicCell(1, 0, 31)]
    assert _points(kept) == 2**62
    x, y = pair.seeds_for(HashHalves(0x7FFFFFFF, 0x7FFFFFFF))
    assert kept[0].fragment.contains(x, y)
