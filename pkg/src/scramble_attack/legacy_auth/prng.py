"""Parameters and single steps of the legacy generator."""

from dataclasses import dataclass

from scramble_attack.errors import InvalidParametersError
from scramble_attack.legacy_auth.consts import (
    ADDITIVE,
    DEFAULT_MODULUS,
    DEFAULT_ROUNDS,
    DIGIT_OFFSET,
    DIGIT_SPAN,
    ENGINE_HALF_WIDTH_BITS,
    HALF_BITS_MAX,
    HASH_OUTPUT_BITS,
    RESPONSE_BYTE_SPREAD,
    SEED_MULTIPLIER,
)


@dataclass(frozen=True)
class ScrambleParams:
    """Everything that fixes the forward scramble.

    The defaults are the real engine. ``half_width_bits`` shrinks the seed domain to
    ``[0, 2**half_width_bits)`` for toy runs. ``reduce_seeds`` reduces the seeds modulo ``n``
    before the first step; the first step reduces anyway, so digits are the same either way.
    """

    n: int = DEFAULT_MODULUS
    rounds: int = DEFAULT_ROUNDS
    digit_span: int = DIGIT_SPAN
    digit_offset: int = DIGIT_OFFSET
    additive: int = ADDITIVE
    half_width_bits: int = ENGINE_HALF_WIDTH_BITS
    reduce_seeds: bool = False

    def __post_init__(self) -> None:
        assert__scramble_params__are_valid(self)

    @classmethod
    def toy(cls, half_width_bits: int, modulus_bits: int, rounds: int = DEFAULT_ROUNDS) -> "ScrambleParams":
        """Build a reduced domain with ``n = 2**modulus_bits - 1``."""
        return cls(n=(1 << modulus_bits) - 1, rounds=rounds, half_width_bits=half_width_bits)

    @property
    def box_side(self) -> int:
        """Side of the seed domain ``[0, box_side)**2``."""
        return 1 << self.half_width_bits

    @property
    def half_mask(self) -> int:
        return self.box_side - 1

    @property
    def hash_bits(self) -> int:
        """Width of the password hash halves this domain can hold; the engine stores 31 bits."""
        return min(self.half_width_bits, HASH_OUTPUT_BITS)

    @property
    def is_engine_default(self) -> bool:
        """Whether these are the parameters of the real engine (up to ``reduce_seeds``)."""
        return (self.n, self.rounds, self.digit_span, self.digit_offset, self.additive, self.half_width_bits) == (
            DEFAULT_MODULUS,
            DEFAULT_ROUNDS,
            DIGIT_SPAN,
            DIGIT_OFFSET,
            ADDITIVE,
            ENGINE_HALF_WIDTH_BITS,
        )

    def as_dict(self) -> dict[str, int]:
        return {"modulus": self.n, "rounds": self.rounds, "half_width_bits": self.half_width_bits}


def assert__scramble_params__are_valid(params: ScrambleParams) -> ScrambleParams:
    """Validate scramble parameters.

    Rules:
    - ``n`` exceeds the digit span, so every digit is below the span
    - at least one round
    - seeds fit the 32-bit hash halves
    - the digit span fits the 5 bits the extra digit masks, and the offset keeps bytes in range
    """
    problems = []
    if params.n <= params.digit_span:
        problems.append(f"n ({params.n}) must exceed digit_span ({params.digit_span})")
    if params.rounds < 1:
        problems.append(f"rounds must be at least 1, got {params.rounds}")
    if not 1 <= params.half_width_bits <= HALF_BITS_MAX:
        problems.append(f"half_width_bits must be in [1, {HALF_BITS_MAX}], got {params.half_width_bits}")
    if not 1 <= params.digit_span <= RESPONSE_BYTE_SPREAD:
        problems.append(f"digit_span must be in [1, {RESPONSE_BYTE_SPREAD}], got {params.digit_span}")
    if params.digit_offset % RESPONSE_BYTE_SPREAD or params.digit_offset + RESPONSE_BYTE_SPREAD > 256:
        problems.append(f"digit_offset must be a multiple of 32 no larger than 224, got {params.digit_offset}")
    if params.additive < 0:
        problems.append(f"additive must be non-negative, got {params.additive}")

    if problems:
        raise InvalidParametersError("Invalid scramble parameters:\n- " + "\n- ".join(problems))

    return params


@dataclass(frozen=True)
class PrngState:
    """Generator state. Both words are below ``n`` once a step has run."""

    s1: int
    s2: int
    params: ScrambleParams

    @classmethod
    def seeded(cls, x: int, y: int, params: ScrambleParams) -> "PrngState":
        if params.reduce_seeds:
            x, y = x % params.n, y % params.n
        return cls(x, y, params)


def prng_step(state: PrngState) -> tuple[PrngState, int]:
    """Advance one step and return the new state with its digit ``floor(span * s1 / n)``."""
    params = state.params
    s1 = (SEED_MULTIPLIER * state.s1 + state.s2) % params.n
    s2 = (s1 + state.s2 + params.additive) % params.n
    return PrngState(s1, s2, params), (params.digit_span * s1) // params.n
