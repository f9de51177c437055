"""Procedure 1: the polygon set of seeds that reproduce one observed response.

Every digit constrains ``alpha*X + beta*Y`` to one strip per wrap count ``delta``. The strips
of consecutive digits are nearly parallel, so branching on the ``delta`` values that meet the
current fragment stays small at every step.

The digits only depend on the seeds modulo the period lattice ``(n/3) Z x n Z`` (``n Z x n Z``
when 3 does not divide ``n``). The default strategy searches one period and tiles the box with
translates of what it finds; ``strategy="direct"`` searches the whole box.
"""

import logging
from math import floor
from typing import Literal

from scramble_attack.attack_engine.consts import EXPECTED_POLYGON_COUNTS, W9_CANDIDATES
from scramble_attack.attack_engine.types import ChallengeResponsePair, PolygonSet
from scramble_attack.errors import NoPolygonError
from scramble_attack.exact_geometry import HalfPlane, RationalConvexPolygon
from scramble_attack.legacy_auth.linear_forms import LinearForm, all_linear_forms
from scramble_attack.legacy_auth.prng import ScrambleParams

logger = logging.getLogger(__name__)

TStrategy = Literal["auto", "periodic", "direct"]
DigitConstraint = tuple[LinearForm, int]
DeltaPath = tuple[int, ...]


def digit_constraints(response: bytes, w9: int, params: ScrambleParams) -> list[DigitConstraint] | None:
    """Pair each linear form with the digit it must produce, or ``None`` when ``w9`` is impossible.

    A digit is below ``digit_span`` by construction, so any derived digit at or above it rules
    the candidate out without geometry.
    """
    if not 0 <= w9 < params.digit_span:
        return None
    digits = [(byte ^ w9) - params.digit_offset for byte in response]
    if any(not 0 <= d < params.digit_span for d in digits):
        return None

    forms = all_linear_forms(params)
    return [*zip(forms[:-1], digits, strict=True), (forms[-1], w9)]


def strip_halfplanes(form: LinearForm, digit: int, delta: int, params: ScrambleParams) -> tuple[HalfPlane, HalfPlane]:
    """The strip where step ``form.index`` yields ``digit`` with ``delta`` wraps.

    ``n*(span*delta + digit) <= span*(alpha*X + beta*Y + additive*gamma) < n*(span*delta + digit + 1)``
    """
    span, n = params.digit_span, params.n
    a, b = span * form.alpha, span * form.beta
    shift = span * params.additive * form.gamma
    lower = HalfPlane.at_least(a, b, n * (span * delta + digit) - shift, closed=True)
    upper = HalfPlane.make(a, b, n * (span * delta + digit + 1) - shift, closed=False)
    return lower, upper


def delta_window(poly: RationalConvexPolygon, form: LinearForm, digit: int, params: ScrambleParams) -> range:
    """Wrap counts whose strip can meet ``poly``."""
    span, n = params.digit_span, params.n
    shift = span * params.additive * form.gamma
    low, high = poly.functional_range(span * form.alpha, span * form.beta)
    low, high = low + shift, high + shift
    first = floor((low - (digit + 1) * n) / (span * n)) + 1
    last = floor((high - digit * n) / (span * n))
    return range(max(0, first), min(form.delta_max, last) + 1)


def clip_strip(
    poly: RationalConvexPolygon, form: LinearForm, digit: int, delta: int, params: ScrambleParams
) -> RationalConvexPolygon:
    lower, upper = strip_halfplanes(form, digit, delta, params)
    poly = poly.intersect(lower)
    return poly if poly.is_empty else poly.intersect(upper)


def branch_and_prune(
    region: RationalConvexPolygon, constraints: list[DigitConstraint], params: ScrambleParams
) -> list[tuple[DeltaPath, RationalConvexPolygon]]:
    """Depth-first over the digits; returns every nonempty leaf with its wrap counts."""
    leaves: list[tuple[DeltaPath, RationalConvexPolygon]] = []
    stack: list[tuple[DeltaPath, RationalConvexPolygon]] = [((), region)]
    while stack:
        path, poly = stack.pop()
        if len(path) == len(constraints):
            leaves.append((path, poly))
            continue
        form, digit = constraints[len(path)]
        # reversed so the stack pops wrap counts in ascending order
        for delta in reversed(delta_window(poly, form, digit, params)):
            piece = clip_strip(poly, form, digit, delta, params)
            if not piece.is_empty:
                stack.append(((*path, delta), piece))
    return leaves


def _seed_box(params: ScrambleParams) -> RationalConvexPolygon:
    return RationalConvexPolygon.from_box(0, 0, params.box_side, params.box_side, open_high=True)


def _dedupe(polygons: list[RationalConvexPolygon]) -> list[RationalConvexPolygon]:
    unique = {poly.key: poly for poly in polygons}
    return [unique[key] for key in sorted(unique)]


def _direct_polygons(constraints: list[DigitConstraint], params: ScrambleParams) -> list[RationalConvexPolygon]:
    return _dedupe([poly for _, poly in branch_and_prune(_seed_box(params), constraints, params)])


def _period(params: ScrambleParams) -> int:
    return params.n // 3 if params.n % 3 == 0 else params.n


def _periodic_polygons(
    constraints: list[DigitConstraint], params: ScrambleParams
) -> tuple[list[RationalConvexPolygon], list[RationalConvexPolygon], list[tuple[int, int, int]]] | None:
    """Search one period, then tile. ``None`` when a full polygon does not fit the search window."""
    n, px, side = params.n, _period(params), params.box_side
    domain = RationalConvexPolygon.from_box(0, 0, px, n, open_high=True)
    paths = sorted({path for path, _ in branch_and_prune(domain, constraints, params)})

    window = (-n, -n, px + n, 2 * n)
    wide = RationalConvexPolygon.from_box(*window, open_high=True)
    prototypes: dict[tuple, RationalConvexPolygon] = {}
    for path in paths:
        poly = wide
        for (form, digit), delta in zip(constraints, path, strict=True):
            poly = clip_strip(poly, form, digit, delta, params)
        if poly.is_empty:
            continue
        xmin, ymin, xmax, ymax = poly.bounding_box()
        if xmin <= window[0] or ymin <= window[1] or xmax >= window[2] or ymax >= window[3]:
            return None
        vx, vy = poly.vertices[0]
        proto = poly.translate(-floor(vx / px) * px, -floor(vy / n) * n)
        prototypes.setdefault(proto.key, proto)

    ordered = [prototypes[key] for key in sorted(prototypes)]
    box = _seed_box(params)
    tiles: list[tuple[tuple, RationalConvexPolygon, tuple[int, int, int]]] = []
    for idx, proto in enumerate(ordered):
        xmin, ymin, xmax, ymax = proto.bounding_box()
        for i in range(floor(-xmax / px), floor((side - xmin) / px) + 1):
            for j in range(floor(-ymax / n), floor((side - ymin) / n) + 1):
                tile = proto.translate(i * px, j * n)
                for hp in box.constraints:
                    tile = tile.intersect(hp)
                if not tile.is_empty:
                    tiles.append((tile.key, tile, (idx, i, j)))

    tiles.sort(key=lambda item: item[0])
    return ordered, [tile for _, tile, _ in tiles], [placement for _, _, placement in tiles]


def polygon_set_for_w9(
    pair: ChallengeResponsePair, w9: int, params: ScrambleParams, strategy: TStrategy = "auto"
) -> PolygonSet | None:
    """The polygon set assuming extra digit ``w9``; ``None`` when it is empty."""
    constraints = digit_constraints(pair.response.data, w9, params)
    if constraints is None:
        return None

    use_periodic = strategy == "periodic" or (strategy == "auto" and params.box_side >= params.n)
    if use_periodic:
        tiled = _periodic_polygons(constraints, params)
        if tiled is not None:
            prototypes, polygons, placements = tiled
            if not polygons:
                return None
            return PolygonSet(
                pair=pair,
                w9=w9,
                polygons=tuple(polygons),
                prototypes=tuple(prototypes),
                placements=tuple(placements),
                w9_candidates=(w9,),
            )
        logger.warning("polygon outgrew the periodic search window for w9=%d; searching the whole box", w9)

    polygons = _direct_polygons(constraints, params)
    if not polygons:
        return None
    return PolygonSet(pair=pair, w9=w9, polygons=tuple(polygons), w9_candidates=(w9,))


def recover_w9(
    pair: ChallengeResponsePair, params: ScrambleParams, strategy: TStrategy = "auto"
) -> list[tuple[int, PolygonSet]]:
    """Try every extra digit; return those with a nonempty polygon set (normally exactly one)."""
    survivors = []
    for w9 in range(W9_CANDIDATES):
        polygon_set = polygon_set_for_w9(pair, w9, params, strategy)
        if polygon_set is not None:
            survivors.append((w9, polygon_set))
    logger.debug("extra digit candidates surviving: %s", [w9 for w9, _ in survivors])
    return survivors


def procedure1(pair: ChallengeResponsePair, params: ScrambleParams, strategy: TStrategy = "auto") -> PolygonSet:
    """Polygon set whose integer points are exactly the seeds reproducing ``pair.response``.

    Raises:
        NoPolygonError: if no extra digit leaves a nonempty set.
    """
    survivors = recover_w9(pair, params, strategy)
    if not survivors:
        raise NoPolygonError(f"no extra digit reproduces response {pair.response}; corrupted pair?")

    if len(survivors) == 1:
        polygon_set = survivors[0][1]
    else:
        logger.warning(
            "%d extra digits survive (%s); keeping the union of their polygon sets",
            len(survivors),
            [w9 for w9, _ in survivors],
        )
        polygon_set = _union(pair, [polygon_set for _, polygon_set in survivors])

    if params.is_engine_default and len(polygon_set) not in EXPECTED_POLYGON_COUNTS:
        logger.warning("polygon set has %d polygons (usually 36 or 48)", len(polygon_set))
    return polygon_set


def _union(pair: ChallengeResponsePair, sets: list[PolygonSet]) -> PolygonSet:
    prototypes: list[RationalConvexPolygon] = []
    tagged: list[tuple[tuple, RationalConvexPolygon, tuple[int, int, int] | None]] = []
    for polygon_set in sets:
        base = len(prototypes)
        prototypes.extend(polygon_set.prototypes)
        placements = polygon_set.placements or (None,) * len(polygon_set)
        for poly, placement in zip(polygon_set.polygons, placements, strict=True):
            shifted = None if placement is None else (placement[0] + base, placement[1], placement[2])
            tagged.append((poly.key, poly, shifted))
    tagged.sort(key=lambda item: item[0])

    all_placed = all(placement is not None for _, _, placement in tagged)
    return PolygonSet(
        pair=pair,
        w9=sets[0].w9,
        polygons=tuple(poly for _, poly, _ in tagged),
        prototypes=tuple(prototypes) if all_placed else (),
        placements=tuple(p for _, _, p in tagged if p is not None) if all_placed else (),
        w9_candidates=tuple(s.w9 for s in sets),
    )
