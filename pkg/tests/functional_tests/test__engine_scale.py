"""The attack on the real engine parameters."""

import logging
import random
import string
from collections import Counter
from math import ceil, floor

import pytest

from scramble_attack.attack_engine.consts import EXPECTED_POLYGON_COUNTS
from scramble_attack.attack_engine.orchestrator import run_attack
from scramble_attack.attack_engine.procedure1 import procedure1, recover_w9
from scramble_attack.attack_engine.procedure3 import procedure3
from scramble_attack.attack_engine.scoring import mean_rate, score_candidates
from scramble_attack.attack_engine.types import ChallengeResponsePair, PolygonSet
from scramble_attack.capture_io.sessions import generate_session, generate_sessions, password_halves, records_to_pairs
from scramble_attack.exact_geometry import RationalConvexPolygon, lattice_count, row_interval
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.scramble import forward_digits, scramble_seeds
from scramble_attack.legacy_auth.types import Response

logger = logging.getLogger(__name__)

ENGINE = ScrambleParams()
BOX = RationalConvexPolygon.from_box(0, 0, ENGINE.box_side, ENGINE.box_side, open_high=True)
STRUCTURE_PAIR_COUNT = 100
SAMPLED_POINTS_PER_SET = 1000
# 36 or 48 full translates; the rest add partial translates cut by the box edge (measured 266/300)
MIN_EXPECTED_COUNT_RATE = 0.8
W9_TRIALS = 100
MIN_UNIQUE_W9_RATE = 0.9
MIN_TAMPERED_REJECTION_RATE = 0.9
PAIRS_FOR_ATTACK = 10
MAX_CANDIDATES = 5000
MAX_EXTRA_PAIRS = 1000
RANDOM_PASSWORDS = 5
PASSWORD_LENGTH = 8


def _random_password(idx: int) -> str:
    rng = random.Random(f"password-{idx}")
    return "".join(rng.choice(string.ascii_letters + string.digits) for _ in range(PASSWORD_LENGTH))


def _engine_pairs(count: int, seed: int) -> list[tuple[str, ChallengeResponsePair]]:
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        password = "".join(rng.choice(string.printable[:94]) for _ in range(rng.randint(1, 12)))
        pairs.append((password, generate_session(password, rng.getrandbits(32), ENGINE).to_pair(ENGINE)))
    return pairs


def _sample_points(polygon_set: PolygonSet, count: int, rng: random.Random) -> list[tuple[int, int]]:
    """Random lattice points: a polygon weighted by its point count, a random row, a random column."""
    weights = [lattice_count(poly) for poly in polygon_set.polygons]
    samples = []
    while len(samples) < count:
        (poly,) = rng.choices(polygon_set.polygons, weights=weights)
        samples.append(_random_point(poly, rng))
    return samples


def _random_point(poly: RationalConvexPolygon, rng: random.Random) -> tuple[int, int]:
    _, ymin, _, ymax = poly.bounding_box()
    while True:
        y = rng.randint(ceil(ymin), floor(ymax))
        lo, hi = row_interval(poly, y)
        if lo <= hi:
            return rng.randint(lo, hi), y


@pytest.mark.slow
def test__polygon_sets_reproduce_their_response():
    rng = random.Random(99)
    counts = Counter()
    tiled = 0
    for _, pair in _engine_pairs(STRUCTURE_PAIR_COUNT, 99):
        polygon_set = procedure1(pair, ENGINE)
        counts[len(polygon_set)] += 1
        assert len(polygon_set) >= min(EXPECTED_POLYGON_COUNTS)

        # every polygon is a whole-period translate of a prototype, cut to the box
        tiled += bool(polygon_set.placements)
        for poly, (proto_idx, i, j) in zip(polygon_set.polygons, polygon_set.placements, strict=False):
            tile = polygon_set.prototypes[proto_idx].translate(i * (ENGINE.n // 3), j * ENGINE.n)
            for hp in BOX.constraints:
                tile = tile.intersect(hp)
            assert tile == poly
        for x, y in _sample_points(polygon_set, SAMPLED_POINTS_PER_SET, rng):
            assert scramble_seeds(x, y, ENGINE) == pair.response

    logger.info("polygon counts: %s", dict(counts))
    assert tiled > STRUCTURE_PAIR_COUNT // 2
    expected = sum(n for count, n in counts.items() if count in EXPECTED_POLYGON_COUNTS)
    assert expected >= MIN_EXPECTED_COUNT_RATE * STRUCTURE_PAIR_COUNT


@pytest.mark.slow
def test__the_true_extra_digit_survives():
    unique = 0
    for password, pair in _engine_pairs(W9_TRIALS, 7):
        x, y = pair.seeds_for(password_halves(password, ENGINE))
        survivors = [w9 for w9, _ in recover_w9(pair, ENGINE)]
        assert forward_digits(x, y, ENGINE)[-1] in survivors
        unique += len(survivors) == 1

    logger.info("one extra digit left in %d of %d pairs", unique, W9_TRIALS)
    assert unique >= MIN_UNIQUE_W9_RATE * W9_TRIALS


@pytest.mark.slow
def test__tampered_responses_leave_no_extra_digit():
    rng = random.Random(8)
    rejected = 0
    for _, pair in _engine_pairs(W9_TRIALS, 8):
        data = bytearray(pair.response.data)
        idx = rng.randrange(len(data))
        data[idx] = 64 + (data[idx] - 64 + rng.randrange(1, 32)) % 32
        tampered = ChallengeResponsePair(pair.challenge_hash, Response(bytes(data)))
        rejected += not recover_w9(tampered, ENGINE)

    logger.info("%d of %d tampered responses left no extra digit", rejected, W9_TRIALS)
    assert rejected >= MIN_TAMPERED_REJECTION_RATE * W9_TRIALS


@pytest.mark.slow
@pytest.mark.parametrize("password", [_random_password(idx) for idx in range(RANDOM_PASSWORDS)])
def test__ten_pairs_leave_a_small_set_with_the_truth(password: str):
    truth = password_halves(password, ENGINE)
    pairs = records_to_pairs(generate_sessions(password, PAIRS_FOR_ATTACK, 0, ENGINE), ENGINE)

    result = run_attack(pairs, params=ENGINE, truth=truth)
    assert truth in result.candidates
    assert 1 <= len(result.candidates) <= MAX_CANDIDATES
    assert all(stage.truth_present for stage in result.stages)

    scores = score_candidates(result.candidates, truth, 1000, 1, ENGINE)
    assert next(score.rate for score in scores if score.candidate == truth) == 1.0
    assert mean_rate(scores) >= 0.85

    # more logins narrow the set down to the password hash alone
    candidates = result.candidates
    rng = random.Random(password)
    for extra in range(MAX_EXTRA_PAIRS):
        if len(candidates) == 1:
            break
        record = generate_session(password, rng.getrandbits(32), ENGINE)
        candidates = procedure3(candidates, record.to_pair(ENGINE), ENGINE)
    logger.info("%s: unique after %d extra pairs", password, extra)
    assert candidates.points == [truth]
