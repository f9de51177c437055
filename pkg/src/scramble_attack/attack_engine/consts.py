"""Defaults of the attack schedule."""

DEFAULT_P1_PAIRS = 5
DEFAULT_CELL_EXPONENTS = (24, 20, 16, 12)
DEFAULT_SIEVE_BUDGET = 2**24
MIN_P1_PAIRS = 2

EXPECTED_POLYGON_COUNTS = frozenset({36, 48})
"""Polygon counts of one pair's set on the engine parameters, up to partial translates at the box edge."""

W9_CANDIDATES = 32

DEFAULT_REFINE_FLOOR = 6
"""Finest cell exponent the extra Procedure-2 passes may reach while extraction is over budget."""

REFINE_STEP = 2

DEFAULT_EXTRACT_CHUNK = 1 << 20
"""Lattice points held in one extraction buffer before it is sieved."""
