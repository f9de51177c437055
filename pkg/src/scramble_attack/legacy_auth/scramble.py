"""Forward scramble: hash halves and a challenge to the response bytes."""

import numpy as np

from scramble_attack.legacy_auth.consts import SEED_MULTIPLIER
from scramble_attack.legacy_auth.hashing import hash_password
from scramble_attack.legacy_auth.prng import PrngState, ScrambleParams, prng_step
from scramble_attack.legacy_auth.types import HashHalves, Response, assert__response__is_valid

INT64_LIMIT = 1 << 62


def forward_digits(x: int, y: int, params: ScrambleParams) -> tuple[int, ...]:
    """Return the ``rounds + 1`` raw digits for seeds ``(x, y)``; the last one is the mask digit."""
    state = PrngState.seeded(x, y, params)
    digits = []
    for _ in range(params.rounds + 1):
        state, digit = prng_step(state)
        digits.append(digit)
    return tuple(digits)


def scramble_seeds(x: int, y: int, params: ScrambleParams) -> Response:
    *digits, mask = forward_digits(x, y, params)
    return Response(bytes((digit + params.digit_offset) ^ mask for digit in digits))


def scramble(password_hash: HashHalves, challenge_hash: HashHalves, params: ScrambleParams) -> Response:
    """Compute the response a client holding ``password_hash`` sends for ``challenge_hash``."""
    return scramble_seeds(password_hash.h1 ^ challenge_hash.h1, password_hash.h2 ^ challenge_hash.h2, params)


def challenge_halves(challenge_text: bytes | str, params: ScrambleParams) -> HashHalves:
    """Hash a challenge and fit it to the parameters' seed width."""
    return hash_password(challenge_text).fit(params)


def verify(
    password_hash: HashHalves, challenge_text: bytes | str, response: Response, params: ScrambleParams
) -> bool:
    """Server-side check of a login.

    Raises:
        MalformedInputError: if ``response`` has the wrong length or an impossible byte.
    """
    assert__response__is_valid(response, params)
    return scramble(password_hash, challenge_halves(challenge_text, params), params) == response


def _working_dtype(params: ScrambleParams) -> type | np.dtype:
    worst = max(
        (SEED_MULTIPLIER + 1) * params.box_side + params.additive,
        (SEED_MULTIPLIER + 1) * params.n,
        params.digit_span * params.n,
    )
    return np.int64 if worst < INT64_LIMIT else object


def scramble_many(xs: np.ndarray, ys: np.ndarray, params: ScrambleParams) -> np.ndarray:
    """Vectorised ``scramble_seeds``: an ``(len(xs), rounds)`` ``uint8`` array of response bytes.

    Works in ``int64`` when the parameters cannot overflow it and in Python ints otherwise.
    """
    dtype = _working_dtype(params)
    n = params.n
    s1 = np.asarray(xs).astype(dtype)
    s2 = np.asarray(ys).astype(dtype)
    if params.reduce_seeds:
        s1, s2 = s1 % n, s2 % n

    digits = np.empty((s1.shape[0], params.rounds + 1), dtype=dtype)
    for i in range(params.rounds + 1):
        s1 = (SEED_MULTIPLIER * s1 + s2) % n
        s2 = (s1 + s2 + params.additive) % n
        digits[:, i] = (params.digit_span * s1) // n

    mask = digits[:, params.rounds : params.rounds + 1]
    return ((digits[:, : params.rounds] + params.digit_offset) ^ mask).astype(np.uint8)


def matches_response(xs: np.ndarray, ys: np.ndarray, response: Response, params: ScrambleParams) -> np.ndarray:
    """Boolean mask of the seeds whose scramble equals ``response``."""
    expected = np.frombuffer(response.data, dtype=np.uint8)
    return np.all(scramble_many(xs, ys, params) == expected, axis=1)
