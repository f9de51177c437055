"""Instrumented end-to-end runs on the toy domain, checked against exhaustive search."""

import random

import pytest

from scramble_attack.attack_engine.orchestrator import run_attack
from scramble_attack.attack_engine.types import AttackConfig
from scramble_attack.capture_io.sessions import generate_sessions, password_halves, records_to_pairs
from scramble_attack.legacy_auth.prng import ScrambleParams
from tests.consts import TOY_CELL_EXPONENTS, TOY_HALF_WIDTH_BITS, TOY_MODULUS_BITS, TOY_SESSION_COUNT
from tests.fixtures.oracle import brute_force_preimages

RUN_COUNT = 50
EXHAUSTIVE_RUN_COUNT = 20


def _passwords(count: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    alphabet = "abcdefghijklmnopqrstuvwxyz0123456789"
    return ["".join(rng.choices(alphabet, k=rng.randint(4, 12))) for _ in range(count)]


@pytest.mark.slow
def test__truth_survives_every_stage():
    params = ScrambleParams.toy(TOY_HALF_WIDTH_BITS, TOY_MODULUS_BITS)
    config = AttackConfig(cell_exponents=TOY_CELL_EXPONENTS, stop_when_unique=False)

    for run_idx, password in enumerate(_passwords(RUN_COUNT, seed=2024)):
        pairs = records_to_pairs(generate_sessions(password, TOY_SESSION_COUNT, run_idx, params), params)
        truth = password_halves(password, params)
        result = run_attack(pairs, config, params, truth=truth)
        lost = [stage.name for stage in result.stages if not stage.truth_present]
        assert not lost, f"{password!r}: truth lost at {lost}"


@pytest.mark.slow
def test__survivors_equal_the_exhaustive_answer():
    params = ScrambleParams.toy(TOY_HALF_WIDTH_BITS, TOY_MODULUS_BITS)
    config = AttackConfig(cell_exponents=TOY_CELL_EXPONENTS, stop_when_unique=False)
    runs = [
        records_to_pairs(generate_sessions(password, TOY_SESSION_COUNT, 1000 + run_idx, params), params)
        for run_idx, password in enumerate(_passwords(EXHAUSTIVE_RUN_COUNT, seed=7))
    ]
    preimages = brute_force_preimages([pair.response.data for pairs in runs for pair in pairs], params)

    for run_idx, pairs in enumerate(runs):
        expected = None
        for pair_idx, pair in enumerate(pairs):
            seeds = preimages[run_idx * TOY_SESSION_COUNT + pair_idx]
            c1, c2 = pair.challenge_hash.h1, pair.challenge_hash.h2
            hashes = {(x ^ c1, y ^ c2) for x, y in seeds}
            expected = hashes if expected is None else expected & hashes

        result = run_attack(pairs, config, params)
        assert {(halves.h1, halves.h2) for halves in result.candidates} == expected
