"""Simulated logins of one user on the toy and the engine parameters."""

import pytest

from scramble_attack.attack_engine.procedure1 import procedure1
from scramble_attack.attack_engine.types import ChallengeResponsePair, PolygonSet
from scramble_attack.capture_io.sessions import TraceRecord, generate_sessions, password_halves, records_to_pairs
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.types import HashHalves
from tests.consts import TEST_PASSWORD, TEST_SEED, TOY_HALF_WIDTH_BITS, TOY_MODULUS_BITS, TOY_SESSION_COUNT


@pytest.fixture(scope="session")
def toy_params() -> ScrambleParams:
    return ScrambleParams.toy(TOY_HALF_WIDTH_BITS, TOY_MODULUS_BITS)


@pytest.fixture(scope="session")
def engine_params() -> ScrambleParams:
    return ScrambleParams()


@pytest.fixture(scope="session")
def toy_records(toy_params: ScrambleParams) -> list[TraceRecord]:
    return generate_sessions(TEST_PASSWORD, TOY_SESSION_COUNT, TEST_SEED, toy_params)


@pytest.fixture(scope="session")
def toy_pairs(toy_records: list[TraceRecord], toy_params: ScrambleParams) -> list[ChallengeResponsePair]:
    return records_to_pairs(toy_records, toy_params)


@pytest.fixture(scope="session")
def toy_truth(toy_params: ScrambleParams) -> HashHalves:
    return password_halves(TEST_PASSWORD, toy_params)


@pytest.fixture(scope="session")
def toy_polygon_sets(toy_pairs: list[ChallengeResponsePair], toy_params: ScrambleParams) -> list[PolygonSet]:
    """Procedure-1 sets of the first three toy pairs."""
    return [procedure1(pair, toy_params) for pair in toy_pairs[:3]]
