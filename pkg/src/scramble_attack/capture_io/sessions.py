"""Simulated logins: a server challenge and the response a client would send."""

import random
from dataclasses import dataclass

from scramble_attack.attack_engine.types import ChallengeResponsePair
from scramble_attack.legacy_auth.challenges import random_challenge_text
from scramble_attack.legacy_auth.hashing import hash_password
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.scramble import challenge_halves, scramble
from scramble_attack.legacy_auth.types import HashHalves, Response


@dataclass(frozen=True)
class TraceRecord:
    """One observed login as raw bytes."""

    challenge_text: bytes
    response: bytes

    def to_pair(self, params: ScrambleParams) -> ChallengeResponsePair:
        """Check the response bytes and hash the challenge."""
        response = Response.from_bytes(self.response, params)
        return ChallengeResponsePair.from_challenge(self.challenge_text, response, params)


def password_halves(password: bytes | str, params: ScrambleParams) -> HashHalves:
    """The stored hash of ``password``, fitted to the parameters' seed width."""
    return hash_password(password).fit(params)


def _session(password_hash: HashHalves, rng: random.Random, params: ScrambleParams) -> TraceRecord:
    challenge = random_challenge_text(rng)
    response = scramble(password_hash, challenge_halves(challenge, params), params)
    return TraceRecord(challenge, response.data)


def generate_session(password: bytes | str, rng_seed: int, params: ScrambleParams) -> TraceRecord:
    return _session(password_halves(password, params), random.Random(rng_seed), params)


def generate_sessions(password: bytes | str, count: int, rng_seed: int, params: ScrambleParams) -> list[TraceRecord]:
    """``count`` logins of one user; challenges drawn from one seeded stream."""
    rng = random.Random(rng_seed)
    password_hash = password_halves(password, params)
    return [_session(password_hash, rng, params) for _ in range(count)]


def records_to_pairs(records: list[TraceRecord], params: ScrambleParams) -> list[ChallengeResponsePair]:
    return [record.to_pair(params) for record in records]
