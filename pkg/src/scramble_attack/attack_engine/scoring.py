"""Pass rates of candidates against fresh random challenges."""

import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from scramble_attack.attack_engine.types import CandidateSet
from scramble_attack.errors import InvalidParametersError
from scramble_attack.legacy_auth.challenges import random_challenge_text
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.scramble import challenge_halves, matches_response, scramble
from scramble_attack.legacy_auth.types import HashHalves


@dataclass(frozen=True)
class CandidateScore:
    candidate: HashHalves
    passes: int
    trials: int

    @property
    def rate(self) -> float:
        return self.passes / self.trials


def score_candidates(
    candidates: CandidateSet | Iterable[HashHalves],
    truth: HashHalves,
    trials: int,
    seed: int,
    params: ScrambleParams,
) -> list[CandidateScore]:
    """For each candidate, count the random challenges on which it answers exactly like ``truth``.

    Challenges come from ``random.Random(seed)``, so the table is reproducible.
    """
    if trials < 1:
        raise InvalidParametersError(f"trials must be at least 1, got {trials}")
    if not isinstance(candidates, CandidateSet):
        candidates = CandidateSet.from_halves(candidates)

    rng = random.Random(seed)
    passes = np.zeros(len(candidates), dtype=np.int64)
    for _ in range(trials):
        challenge = challenge_halves(random_challenge_text(rng), params)
        expected = scramble(truth, challenge, params)
        passes += matches_response(
            candidates.h1s ^ challenge.h1, candidates.h2s ^ challenge.h2, expected, params
        )

    return [
        CandidateScore(candidate, int(count), trials)
        for candidate, count in zip(candidates, passes.tolist(), strict=True)
    ]


def mean_rate(scores: Iterable[CandidateScore]) -> float:
    rates = [score.rate for score in scores]
    return sum(rates) / len(rates) if rates else 0.0
