"""Constants of the legacy scramble and password hash."""

DEFAULT_MODULUS = 2**30 - 1
"""The ``max_value`` the engine seeds its generator with."""

DEFAULT_ROUNDS = 8
DIGIT_SPAN = 31
DIGIT_OFFSET = 64
ADDITIVE = 33
SEED_MULTIPLIER = 3
ENGINE_HALF_WIDTH_BITS = 32

# a response byte is a digit+offset XORed with a digit < 32, so only the low 5 bits move
RESPONSE_BYTE_SPREAD = 32

HALF_BITS_MAX = 32
HALF_MASK = (1 << HALF_BITS_MAX) - 1

HASH_NR_SEED = 1345345333
HASH_NR2_SEED = 0x12345671
HASH_ADD_SEED = 7
HASH_OUTPUT_BITS = 31
HASH_OUTPUT_MASK = (1 << HASH_OUTPUT_BITS) - 1
HASH_SKIPPED_BYTES = frozenset(b" \t")
