"""Value types exchanged by the legacy primitives."""

import re
from dataclasses import dataclass

from scramble_attack.errors import MalformedInputError
from scramble_attack.legacy_auth.consts import HALF_MASK, RESPONSE_BYTE_SPREAD
from scramble_attack.legacy_auth.prng import ScrambleParams

HALVES_TEXT_PATTERN = re.compile(r"^([0-9a-fA-F]{8}):([0-9a-fA-F]{8})$")


@dataclass(frozen=True, order=True)
class HashHalves:
    """Two unsigned 32-bit words: a password hash, a challenge hash, or their XOR."""

    h1: int
    h2: int

    def __post_init__(self) -> None:
        for name, value in (("h1", self.h1), ("h2", self.h2)):
            if not 0 <= value <= HALF_MASK:
                raise MalformedInputError(f"{name} must be an unsigned 32-bit integer, got {value}")

    def __xor__(self, other: "HashHalves") -> "HashHalves":
        return HashHalves(self.h1 ^ other.h1, self.h2 ^ other.h2)

    def __str__(self) -> str:
        return f"{self.h1:08x}:{self.h2:08x}"

    @classmethod
    def from_text(cls, text: str) -> "HashHalves":
        """Parse the ``h1:h2`` form, two 8-digit hex fields."""
        match = HALVES_TEXT_PATTERN.match(text.strip())
        if not match:
            raise MalformedInputError(f"expected 'h1:h2' with two 8-digit hex fields, got {text!r}")
        return cls(int(match.group(1), 16), int(match.group(2), 16))

    def fit(self, params: ScrambleParams) -> "HashHalves":
        """Keep the low ``half_width_bits`` of each half; identity on the engine's 31-bit hashes."""
        return HashHalves(self.h1 & params.half_mask, self.h2 & params.half_mask)


@dataclass(frozen=True)
class Response:
    """The bytes a client returns for one challenge."""

    data: bytes

    def __str__(self) -> str:
        return self.data.hex()

    def __len__(self) -> int:
        return len(self.data)

    @classmethod
    def from_bytes(cls, data: bytes, params: ScrambleParams) -> "Response":
        """Build a response after checking its length and byte range."""
        return assert__response__is_valid(cls(bytes(data)), params)

    @classmethod
    def from_hex(cls, text: str, params: ScrambleParams) -> "Response":
        try:
            data = bytes.fromhex(text.strip())
        except ValueError as err:
            raise MalformedInputError(f"response is not valid hex: {text!r}") from err
        return cls.from_bytes(data, params)


def assert__response__is_valid(response: Response, params: ScrambleParams) -> Response:
    """Validate a response against the parameters.

    Rules:
    - exactly ``rounds`` bytes
    - every byte in ``[digit_offset, digit_offset + 32)``
    """
    if len(response.data) != params.rounds:
        raise MalformedInputError(f"response must have {params.rounds} bytes, got {len(response.data)}")

    low, high = params.digit_offset, params.digit_offset + RESPONSE_BYTE_SPREAD
    for idx, value in enumerate(response.data):
        if not low <= value < high:
            raise MalformedInputError(f"response byte {idx} is {value}, outside [{low}, {high})")

    return response
