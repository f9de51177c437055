"""The complete attack: Procedure 1 on a few pairs, Procedure 2 across them, then sieving."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Callable, Sequence

from scramble_attack.attack_engine.procedure1 import procedure1
from scramble_attack.attack_engine.consts import REFINE_STEP
from scramble_attack.attack_engine.procedure2 import (
    OccupancyIndex,
    cross_filter,
    procedure2,
    restrict_to_hash_domain,
    wrap_polygon_set,
)
from scramble_attack.attack_engine.procedure3 import extract_and_sieve, procedure3
from scramble_attack.attack_engine.types import (
    AttackConfig,
    AttackResult,
    CellPiece,
    ChallengeResponsePair,
    PolygonSet,
    StageLog,
    assert__attack_config__is_valid,
)
from scramble_attack.errors import AttackInputError, EnumerationBudgetExceededError, NoPolygonError
from scramble_attack.exact_geometry import lattice_count
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.types import HashHalves

logger = logging.getLogger(__name__)


def assert__pairs__can_drive_attack(pairs: Sequence[ChallengeResponsePair]) -> Sequence[ChallengeResponsePair]:
    """Validate the observed pairs.

    Rules:
    - at least two pairs
    - no challenge hash repeats
    """
    if len(pairs) < 2:
        raise AttackInputError(f"the attack needs at least 2 challenge-response pairs, got {len(pairs)}")

    seen: dict[HashHalves, int] = {}
    for idx, pair in enumerate(pairs):
        if pair.challenge_hash in seen:
            first = seen[pair.challenge_hash]
            raise AttackInputError(f"pairs {first} and {idx} share challenge hash {pair.challenge_hash}")
        seen[pair.challenge_hash] = idx

    return pairs


def _timed_procedure1(pair: ChallengeResponsePair, params: ScrambleParams) -> tuple[PolygonSet, float]:
    """Procedure 1 with its own compute time, measured where it runs."""
    started = time.perf_counter()
    polygon_set = procedure1(pair, params)
    return polygon_set, time.perf_counter() - started


def _polygon_sets(
    head: Sequence[ChallengeResponsePair], params: ScrambleParams, workers: int
) -> list[tuple[PolygonSet, float]]:
    """Run Procedure 1 per pair, in input order whatever the worker count."""

    def collect(idx: int, job: Callable[[], tuple[PolygonSet, float]]) -> tuple[PolygonSet, float]:
        try:
            return job()
        except NoPolygonError as err:
            raise NoPolygonError(f"procedure1[{idx}]: {err}") from err

    if workers == 1:
        return [collect(idx, partial(_timed_procedure1, pair, params)) for idx, pair in enumerate(head)]

    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_timed_procedure1, pair, params) for pair in head]
        return [collect(idx, future.result) for idx, future in enumerate(futures)]


def _truth_in_pieces(pieces: list[CellPiece], truth: HashHalves, pair: ChallengeResponsePair) -> bool:
    x, y = pair.seeds_for(truth)
    return any(piece.fragment.contains(x, y) for piece in pieces)


class _StageRecorder:
    def __init__(self, truth: HashHalves | None) -> None:
        self.truth = truth
        self.stages: list[StageLog] = []

    def record(self, stage: StageLog, truth_present: bool | None) -> None:
        stage.truth_present = truth_present
        self.stages.append(stage)
        logger.info(
            "%s: polygons=%s pieces=%s lattice_points=%s survivors=%s (%.3fs)",
            stage.name,
            stage.polygons,
            stage.pieces,
            stage.lattice_points,
            stage.survivors,
            stage.seconds,
        )
        if truth_present is False:
            logger.warning("%s: the known password hash is no longer present", stage.name)


def run_attack(
    pairs: Sequence[ChallengeResponsePair],
    config: AttackConfig | None = None,
    params: ScrambleParams | None = None,
    truth: HashHalves | None = None,
) -> AttackResult:
    """Recover the password hash (or a small candidate set) from observed pairs.

    ``truth``, when known, is only used to record at every stage whether it is still present.

    Raises:
        AttackInputError: fewer than two pairs, or repeated challenges.
        NoPolygonError: a Procedure-1 pair yields no polygon set (message names the stage).
        EnumerationBudgetExceededError: extraction would exceed ``config.sieve_budget``.
    """
    config = config or AttackConfig()
    params = params or ScrambleParams()
    assert__pairs__can_drive_attack(pairs)
    assert__attack_config__is_valid(config, params)

    started = time.perf_counter()
    recorder = _StageRecorder(truth)
    k = min(config.p1_pairs, len(pairs))
    head = list(pairs[:k])
    base = head[0]

    polygon_sets = []
    for idx, (polygon_set, seconds) in enumerate(_polygon_sets(head, params, config.workers)):
        polygon_sets.append(polygon_set)
        present = None if truth is None else polygon_set.contains(*polygon_set.pair.seeds_for(truth))
        recorder.record(
            StageLog(
                name=f"procedure1[{idx}]",
                kind="procedure1",
                seconds=seconds,
                polygons=len(polygon_set),
                area=polygon_set.area(),
                lattice_points=polygon_set.lattice_count(),
                w9=list(polygon_set.w9_candidates),
            ),
            present,
        )

    pieces = restrict_to_hash_domain(wrap_polygon_set(polygon_sets[0], params), base, params)
    occupancies = [OccupancyIndex(other) for other in polygon_sets[1:]]

    def record_pieces(name: str, m: int, seconds: float) -> int:
        points = sum(lattice_count(piece.fragment) for piece in pieces)
        recorder.record(
            StageLog(
                name=name,
                kind="procedure2",
                seconds=seconds,
                pieces=len(pieces),
                area=sum((piece.fragment.area() for piece in pieces), Fraction(0)),
                lattice_points=points,
                cell_exponent=m,
            ),
            None if truth is None else _truth_in_pieces(pieces, truth, base),
        )
        return points

    piece_rounds: list[tuple[int, list[CellPiece]]] = []
    for round_idx, (other, occupancy) in enumerate(zip(polygon_sets[1:], occupancies, strict=True)):
        m = config.exponent_for_round(round_idx)
        stage_started = time.perf_counter()
        pieces = procedure2(pieces, base, other, m, params, occupancy)
        piece_rounds.append((m, pieces))
        record_pieces(f"procedure2[{round_idx}]", m, time.perf_counter() - stage_started)

    # earlier rounds saw their set only at a coarse exponent: recheck every set at the finest one,
    # then keep refining while extraction would exceed the budget
    pass_idx = 0
    while True:
        stage_started = time.perf_counter()
        pieces = cross_filter(pieces, base, occupancies, m, params)
        required = record_pieces(f"cross[{pass_idx}]", m, time.perf_counter() - stage_started)
        pass_idx += 1
        if required <= config.sieve_budget or m - REFINE_STEP < config.refine_floor:
            break
        m -= REFINE_STEP

    # the other Procedure-1 pairs were only applied at cell resolution, so they are sieved as points
    # are extracted
    head_sieve = head[1:]
    stage_started = time.perf_counter()
    try:
        sieved = extract_and_sieve(pieces, base, head_sieve, params, config.sieve_budget)
    except EnumerationBudgetExceededError as err:
        raise EnumerationBudgetExceededError(err.budget, err.required, f"extract: {err}") from err
    candidates = sieved.candidates
    truth_kept = None if truth is None else truth in candidates
    extract_seconds = time.perf_counter() - stage_started - sum(sieved.seconds)
    recorder.record(
        StageLog(
            name="extract",
            kind="extract",
            seconds=max(extract_seconds, 0.0),
            pieces=len(pieces),
            lattice_points=sieved.extracted,
            survivors=sieved.extracted,
        ),
        truth_kept,
    )
    # the true hash answers every pair, so it is present after each head sieve iff it is at the end
    for pair_idx, (survivors, seconds) in enumerate(zip(sieved.survivors, sieved.seconds, strict=True), start=1):
        recorder.record(
            StageLog(name=f"procedure3[{pair_idx}]", kind="procedure3", seconds=seconds, survivors=survivors),
            truth_kept,
        )

    for pair_idx in range(k, len(pairs)):
        if len(candidates) == 0:
            break
        if config.stop_when_unique and len(candidates) == 1:
            break
        stage_started = time.perf_counter()
        candidates = procedure3(candidates, pairs[pair_idx], params)
        recorder.record(
            StageLog(
                name=f"procedure3[{pair_idx}]",
                kind="procedure3",
                seconds=time.perf_counter() - stage_started,
                survivors=len(candidates),
            ),
            None if truth is None else truth in candidates,
        )

    return AttackResult(
        candidates=candidates,
        stages=recorder.stages,
        polygon_sets=polygon_sets,
        piece_rounds=piece_rounds,
        wall_seconds=time.perf_counter() - started,
    )
