"""Random well-formed sessions for format round trips."""

import random

from scramble_attack.capture_io.sessions import TraceRecord
from scramble_attack.legacy_auth.challenges import CHALLENGE_LENGTH
from scramble_attack.legacy_auth.prng import ScrambleParams

ROUND_TRIP_SESSIONS = 1000
USERNAME_CHARS = "abcdefghijklmnopqrstuvwxyz0123456789_.-@ üéß用户"


def random_record(rng: random.Random, params: ScrambleParams) -> TraceRecord:
    """Any 8 challenge bytes and a response of in-range bytes."""
    challenge = bytes(rng.randrange(256) for _ in range(CHALLENGE_LENGTH))
    low = params.digit_offset
    response = bytes(rng.randrange(low, low + 32) for _ in range(params.rounds))
    return TraceRecord(challenge, response)


def random_username(rng: random.Random) -> str:
    return "".join(rng.choice(USERNAME_CHARS) for _ in range(rng.randint(0, 16)))
