"""Modules for `scramble-attack`."""

from .attack_engine.orchestrator import run_attack
from .attack_engine.types import AttackConfig, AttackResult, ChallengeResponsePair
from .legacy_auth.hashing import hash_password
from .legacy_auth.prng import ScrambleParams
from .legacy_auth.scramble import HashHalves, Response, scramble, verify

__all__ = [
    "AttackConfig",
    "AttackResult",
    "ChallengeResponsePair",
    "HashHalves",
    "Response",
    "ScrambleParams",
    "hash_password",
    "run_attack",
    "scramble",
    "verify",
]
