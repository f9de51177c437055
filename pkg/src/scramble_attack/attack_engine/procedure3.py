"""Point extraction and Procedure 3, the forward-scramble sieve."""

import logging
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from scramble_attack.attack_engine.consts import DEFAULT_EXTRACT_CHUNK
from scramble_attack.attack_engine.types import CandidateSet, CellPiece, ChallengeResponsePair
from scramble_attack.errors import EnumerationBudgetExceededError, InvalidParametersError
from scramble_attack.exact_geometry import lattice_count, lattice_row_blocks
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.scramble import matches_response

logger = logging.getLogger(__name__)


def _expand_rows(ys: np.ndarray, los: np.ndarray, his: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    lengths = his - los + 1
    starts = np.cumsum(lengths) - lengths
    xs = np.repeat(los - starts, lengths) + np.arange(int(lengths.sum()), dtype=np.int64)
    return xs, np.repeat(ys, lengths)


def _checked_count(pieces: list[CellPiece], budget: int) -> int:
    required = sum(lattice_count(piece.fragment) for piece in pieces)
    if required > budget:
        raise EnumerationBudgetExceededError(budget=budget, required=required)
    return required


def iter_point_chunks(pieces: Iterable[CellPiece], chunk_size: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Seed-space points of ``pieces`` as ``(xs, ys)`` int64 arrays of at most ``chunk_size`` points.

    Rows are written into one reused buffer; every yielded pair is a fresh copy.
    """
    if chunk_size < 1:
        raise InvalidParametersError(f"chunk_size must be positive, got {chunk_size}")

    buf_x = np.empty(chunk_size, dtype=np.int64)
    buf_y = np.empty(chunk_size, dtype=np.int64)
    filled = 0
    for piece in pieces:
        for block in lattice_row_blocks(piece.fragment):
            xs, ys = _expand_rows(*block)
            offset = 0
            while offset < xs.shape[0]:
                take = min(chunk_size - filled, xs.shape[0] - offset)
                buf_x[filled : filled + take] = xs[offset : offset + take]
                buf_y[filled : filled + take] = ys[offset : offset + take]
                filled += take
                offset += take
                if filled == chunk_size:
                    yield buf_x.copy(), buf_y.copy()
                    filled = 0
    if filled:
        yield buf_x[:filled].copy(), buf_y[:filled].copy()


def extract_points(pieces: Iterable[CellPiece], pair: ChallengeResponsePair, budget: int) -> CandidateSet:
    """Every integer point of ``pieces``, mapped to password space through ``pair``'s challenge.

    Raises:
        EnumerationBudgetExceededError: if the pieces hold more than ``budget`` points.
    """
    pieces = list(pieces)
    required = _checked_count(pieces, budget)

    xs = np.empty(required, dtype=np.int64)
    ys = np.empty(required, dtype=np.int64)
    filled = 0
    for piece in pieces:
        for block in lattice_row_blocks(piece.fragment):
            bx, by = _expand_rows(*block)
            xs[filled : filled + bx.shape[0]] = bx
            ys[filled : filled + by.shape[0]] = by
            filled += bx.shape[0]

    logger.debug("extracted %d lattice points from %d pieces", filled, len(pieces))
    return CandidateSet.from_arrays(xs[:filled] ^ pair.challenge_hash.h1, ys[:filled] ^ pair.challenge_hash.h2)


@dataclass
class SievedExtraction:
    """Outcome of ``extract_and_sieve``: the survivors and per-pair counts summed over chunks."""

    candidates: CandidateSet
    extracted: int
    survivors: list[int] = field(default_factory=list)
    seconds: list[float] = field(default_factory=list)


def extract_and_sieve(
    pieces: Iterable[CellPiece],
    pair: ChallengeResponsePair,
    sieve_pairs: Sequence[ChallengeResponsePair],
    params: ScrambleParams,
    budget: int,
    chunk_size: int = DEFAULT_EXTRACT_CHUNK,
) -> SievedExtraction:
    """``extract_points`` followed by ``procedure3`` over ``sieve_pairs``, one chunk at a time.

    Only one chunk and the survivors so far are ever held in memory. ``survivors[i]`` counts the
    points left after ``sieve_pairs[i]``.

    Raises:
        EnumerationBudgetExceededError: if the pieces hold more than ``budget`` points.
    """
    pieces = list(pieces)
    required = _checked_count(pieces, budget)
    c1, c2 = pair.challenge_hash.h1, pair.challenge_hash.h2

    survivors = [0] * len(sieve_pairs)
    seconds = [0.0] * len(sieve_pairs)
    kept_x: list[np.ndarray] = []
    kept_y: list[np.ndarray] = []
    for xs, ys in iter_point_chunks(pieces, chunk_size):
        h1s, h2s = xs ^ c1, ys ^ c2
        for idx, other in enumerate(sieve_pairs):
            started = time.perf_counter()
            mask = matches_response(
                h1s ^ other.challenge_hash.h1, h2s ^ other.challenge_hash.h2, other.response, params
            )
            h1s, h2s = h1s[mask], h2s[mask]
            seconds[idx] += time.perf_counter() - started
            survivors[idx] += int(h1s.shape[0])
        kept_x.append(h1s)
        kept_y.append(h2s)

    if kept_x:
        h1s, h2s = np.concatenate(kept_x), np.concatenate(kept_y)
    else:
        h1s, h2s = np.empty(0, np.int64), np.empty(0, np.int64)
    candidates = CandidateSet.from_arrays(h1s, h2s, pairs_applied=len(sieve_pairs))

    logger.debug("extracted %d lattice points in chunks of %d, %d survive", required, chunk_size, len(candidates))
    return SievedExtraction(candidates, required, survivors, seconds)


def procedure3(candidates: CandidateSet, pair: ChallengeResponsePair, params: ScrambleParams) -> CandidateSet:
    """Keep the candidates whose scramble of ``pair``'s challenge equals its response."""
    xs = candidates.h1s ^ pair.challenge_hash.h1
    ys = candidates.h2s ^ pair.challenge_hash.h2
    return candidates.filtered(matches_response(xs, ys, pair.response, params))
