"""Server challenges: 8 printable characters."""

import random

CHALLENGE_LENGTH = 8
CHALLENGE_ALPHABET = bytes(range(0x21, 0x7F))
"""Printable ASCII without space; tab and space would be skipped by the hash."""


def random_challenge_text(rng: random.Random) -> bytes:
    return bytes(rng.choice(CHALLENGE_ALPHABET) for _ in range(CHALLENGE_LENGTH))
