"""The classic pre-4.1 ``PASSWORD()`` hash, used only to turn text into hash halves."""

from scramble_attack.legacy_auth.consts import (
    HALF_MASK,
    HASH_ADD_SEED,
    HASH_NR2_SEED,
    HASH_NR_SEED,
    HASH_OUTPUT_MASK,
    HASH_SKIPPED_BYTES,
)
from scramble_attack.legacy_auth.types import HashHalves


def hash_password(text: str | bytes) -> HashHalves:
    """Hash ``text`` into two 31-bit halves.

    Spaces and tabs are skipped. ``str`` input is UTF-8 encoded first.
    Arithmetic wraps at 32 bits; the low 31 bits are identical to a 64-bit ``ulong`` build
    because no step moves high bits downwards.
    """
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)

    nr, add, nr2 = HASH_NR_SEED, HASH_ADD_SEED, HASH_NR2_SEED
    for tmp in data:
        if tmp in HASH_SKIPPED_BYTES:
            continue
        nr = (nr ^ ((((nr & 63) + add) * tmp) + (nr << 8))) & HALF_MASK
        nr2 = (nr2 + ((nr2 << 8) ^ nr)) & HALF_MASK
        add += tmp

    return HashHalves(nr & HASH_OUTPUT_MASK, nr2 & HASH_OUTPUT_MASK)
