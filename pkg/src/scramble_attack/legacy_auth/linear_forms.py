"""Each digit as a linear form in the seeds.

After ``i`` steps ``s1 = (alpha*X + beta*Y + additive*gamma) mod n``. Writing the reduction as
``delta`` whole wraps turns every observed digit into a strip between two parallel lines.
"""

from dataclasses import dataclass
from functools import lru_cache

from scramble_attack.errors import InvalidParametersError
from scramble_attack.legacy_auth.consts import SEED_MULTIPLIER
from scramble_attack.legacy_auth.prng import ScrambleParams


@dataclass(frozen=True)
class LinearForm:
    index: int
    alpha: int
    beta: int
    gamma: int
    delta_max: int

    def value(self, x: int, y: int, params: ScrambleParams) -> int:
        """The unreduced ``alpha*x + beta*y + additive*gamma``."""
        return self.alpha * x + self.beta * y + params.additive * self.gamma

    def digit(self, x: int, y: int, params: ScrambleParams) -> int:
        return (params.digit_span * (self.value(x, y, params) % params.n)) // params.n

    def slope_digits(self, places: int = 4) -> str:
        """``alpha / beta`` truncated to ``places`` decimals."""
        scaled = self.alpha * 10**places // self.beta
        whole, frac = divmod(scaled, 10**places)
        return f"{whole}.{frac:0{places}d}".rstrip("0").rstrip(".")


@lru_cache(maxsize=None)
def linear_coefficients(i: int, params: ScrambleParams) -> LinearForm:
    """Return the form of the digit produced by step ``i`` (1-based)."""
    if i < 1:
        raise InvalidParametersError(f"step index must be at least 1, got {i}")

    # s1-form and s2-form after the first step
    a = (SEED_MULTIPLIER, 1, 0)
    s = (SEED_MULTIPLIER, 2, 1)
    for _ in range(i - 1):
        a = tuple(SEED_MULTIPLIER * ak + sk for ak, sk in zip(a, s, strict=True))
        s = (a[0] + s[0], a[1] + s[1], a[2] + s[2] + 1)

    alpha, beta, gamma = a
    top = params.box_side * (alpha + beta) + params.additive * gamma
    delta_max = -(-top // params.n) - 1
    return LinearForm(index=i, alpha=alpha, beta=beta, gamma=gamma, delta_max=delta_max)


def all_linear_forms(params: ScrambleParams) -> tuple[LinearForm, ...]:
    """Forms for steps ``1 .. rounds + 1``; the last one drives the mask digit."""
    return tuple(linear_coefficients(i, params) for i in range(1, params.rounds + 2))
