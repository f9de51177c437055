import pytest

from scramble_attack.attack_engine.scoring import CandidateScore, mean_rate, score_candidates
from scramble_attack.errors import InvalidParametersError
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.types import HashHalves


def test__the_truth_always_passes(toy_truth: HashHalves, toy_params: ScrambleParams):
    (score,) = score_candidates([toy_truth], toy_truth, trials=50, seed=0, params=toy_params)
    assert score == CandidateScore(toy_truth, 50, 50)
    assert score.rate == 1.0


def test__scores_are_reproducible(toy_truth: HashHalves, toy_params: ScrambleParams):
    others = [toy_truth, HashHalves(1, 2), HashHalves(4095, 4095)]
    first = score_candidates(others, toy_truth, trials=40, seed=9, params=toy_params)
    assert first == score_candidates(others, toy_truth, trials=40, seed=9, params=toy_params)
    assert [score.candidate for score in first] == sorted(others)


def test__mean_rate():
    scores = [CandidateScore(HashHalves(0, 0), 10, 10), CandidateScore(HashHalves(0, 1), 5, 10)]
    assert mean_rate(scores) == 0.75
    assert mean_rate([]) == 0.0


def test__trials_must_be_positive(toy_truth: HashHalves, toy_params: ScrambleParams):
    with pytest.raises(InvalidParametersError):
        score_candidates([toy_truth], toy_truth, trials=0, seed=0, params=toy_params)
