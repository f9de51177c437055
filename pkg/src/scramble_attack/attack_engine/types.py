"""Values passed between the attack stages."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from scramble_attack.attack_engine.consts import (
    DEFAULT_CELL_EXPONENTS,
    DEFAULT_P1_PAIRS,
    DEFAULT_REFINE_FLOOR,
    DEFAULT_SIEVE_BUDGET,
    MIN_P1_PAIRS,
)
from scramble_attack.errors import InvalidParametersError
from scramble_attack.exact_geometry import DyadicCell, RationalConvexPolygon, lattice_count
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.scramble import challenge_halves
from scramble_attack.legacy_auth.types import HashHalves, Response

HALF_MASK = np.uint64(0xFFFFFFFF)
HALF_SHIFT = np.uint64(32)


def _packed_keys(h1s: np.ndarray, h2s: np.ndarray) -> np.ndarray:
    return (np.asarray(h1s).astype(np.uint64) << HALF_SHIFT) | np.asarray(h2s).astype(np.uint64)


@dataclass(frozen=True)
class ChallengeResponsePair:
    """One observed login."""

    challenge_hash: HashHalves
    response: Response
    challenge_text: bytes | None = None

    @classmethod
    def from_challenge(
        cls, challenge_text: bytes, response: Response, params: ScrambleParams
    ) -> "ChallengeResponsePair":
        return cls(challenge_halves(challenge_text, params), response, bytes(challenge_text))

    def seeds_for(self, password_hash: HashHalves) -> tuple[int, int]:
        """The generator seeds ``(X, Y)`` a password produces with this challenge."""
        seeds = password_hash ^ self.challenge_hash
        return seeds.h1, seeds.h2


@dataclass(frozen=True)
class PolygonSet:
    """Convex polygons in seed space whose integer points are exactly the preimage of one response.

    ``placements[i]`` is ``(prototype index, i, j)`` when polygon ``i`` was tiled from a prototype
    by the period lattice; it is empty when the set was built directly.
    """

    pair: ChallengeResponsePair
    w9: int
    polygons: tuple[RationalConvexPolygon, ...]
    prototypes: tuple[RationalConvexPolygon, ...] = ()
    placements: tuple[tuple[int, int, int], ...] = ()
    w9_candidates: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.polygons)

    def area(self) -> Fraction:
        return sum((poly.area() for poly in self.polygons), Fraction(0))

    def lattice_count(self) -> int:
        return sum(lattice_count(poly) for poly in self.polygons)

    def contains(self, x: int, y: int) -> bool:
        return any(poly.contains(x, y) for poly in self.polygons)


@dataclass(frozen=True)
class CellPiece:
    """The part of a polygon inside one dyadic cell."""

    cell: DyadicCell
    fragment: RationalConvexPolygon
    pair: ChallengeResponsePair


@dataclass(frozen=True, eq=False)
class CandidateSet:
    """Sorted, deduplicated password-hash candidates.

    ``pairs_applied`` counts the sieve rounds the set has been through.
    """

    h1s: np.ndarray
    h2s: np.ndarray
    pairs_applied: int = 0

    @classmethod
    def from_arrays(cls, h1s: np.ndarray, h2s: np.ndarray, pairs_applied: int = 0) -> "CandidateSet":
        keys = np.unique(_packed_keys(h1s, h2s))
        return cls((keys >> HALF_SHIFT).astype(np.int64), (keys & HALF_MASK).astype(np.int64), pairs_applied)

    @classmethod
    def from_halves(cls, halves: Iterable[HashHalves], pairs_applied: int = 0) -> "CandidateSet":
        points = list(halves)
        h1s = np.array([p.h1 for p in points], dtype=np.int64)
        h2s = np.array([p.h2 for p in points], dtype=np.int64)
        return cls.from_arrays(h1s, h2s, pairs_applied)

    def __len__(self) -> int:
        return int(self.h1s.shape[0])

    def __iter__(self) -> Iterator[HashHalves]:
        for h1, h2 in zip(self.h1s.tolist(), self.h2s.tolist(), strict=True):
            yield HashHalves(h1, h2)

    def __contains__(self, item: object) -> bool:
        if not isinstance(item, HashHalves):
            return False
        key = (item.h1 << 32) | item.h2
        keys = _packed_keys(self.h1s, self.h2s)
        idx = int(np.searchsorted(keys, np.uint64(key)))
        return idx < len(keys) and int(keys[idx]) == key

    @property
    def points(self) -> list[HashHalves]:
        return list(self)

    def filtered(self, keep: np.ndarray) -> "CandidateSet":
        """Keep the rows where ``keep`` is true; counts one more sieve round."""
        return CandidateSet(self.h1s[keep], self.h2s[keep], self.pairs_applied + 1)


@dataclass(frozen=True)
class AttackConfig:
    p1_pairs: int = DEFAULT_P1_PAIRS
    cell_exponents: tuple[int, ...] = DEFAULT_CELL_EXPONENTS
    sieve_budget: int = DEFAULT_SIEVE_BUDGET
    stop_when_unique: bool = True
    workers: int = 1
    refine_floor: int = DEFAULT_REFINE_FLOOR

    def __post_init__(self) -> None:
        object.__setattr__(self, "cell_exponents", tuple(self.cell_exponents))
        assert__attack_config__is_valid(self)

    def exponent_for_round(self, round_idx: int) -> int:
        """Cell exponent of Procedure-2 round ``round_idx``; the last one repeats."""
        return self.cell_exponents[min(round_idx, len(self.cell_exponents) - 1)]

    def as_dict(self) -> dict:
        return {
            "p1_pairs": self.p1_pairs,
            "cell_exponents": list(self.cell_exponents),
            "sieve_budget": self.sieve_budget,
            "stop_when_unique": self.stop_when_unique,
            "refine_floor": self.refine_floor,
        }


def assert__attack_config__is_valid(config: AttackConfig, params: ScrambleParams | None = None) -> AttackConfig:
    """Validate an attack configuration.

    Rules:
    - at least two Procedure-1 pairs
    - a nonempty, strictly decreasing cell schedule of non-negative exponents,
      each below ``half_width_bits`` when ``params`` is given
    - a positive sieve budget and worker count
    - a non-negative refinement floor
    """
    problems = []
    if config.p1_pairs < MIN_P1_PAIRS:
        problems.append(f"p1_pairs must be at least {MIN_P1_PAIRS}, got {config.p1_pairs}")
    exponents = config.cell_exponents
    if not exponents:
        problems.append("cell_exponents must not be empty")
    elif any(later >= earlier for earlier, later in zip(exponents, exponents[1:])) or exponents[-1] < 0:
        problems.append(f"cell_exponents must be strictly decreasing and non-negative, got {list(exponents)}")
    if params is not None and exponents and exponents[0] >= params.half_width_bits:
        problems.append(
            f"cell exponents must be below half_width_bits ({params.half_width_bits}), got {list(exponents)}"
        )
    if config.sieve_budget < 1:
        problems.append(f"sieve_budget must be positive, got {config.sieve_budget}")
    if config.workers < 1:
        problems.append(f"workers must be positive, got {config.workers}")
    if config.refine_floor < 0:
        problems.append(f"refine_floor must be non-negative, got {config.refine_floor}")

    if problems:
        raise InvalidParametersError("Invalid attack configuration:\n- " + "\n- ".join(problems))

    return config


@dataclass
class StageLog:
    """Counts and timing of one attack stage."""

    name: str
    kind: str
    seconds: float = 0.0
    polygons: int | None = None
    area: Fraction | None = None
    pieces: int | None = None
    lattice_points: int | None = None
    survivors: int | None = None
    w9: list[int] | None = None
    cell_exponent: int | None = None
    truth_present: bool | None = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "polygons": self.polygons,
            "area": None if self.area is None else f"{self.area.numerator}/{self.area.denominator}",
            "pieces": self.pieces,
            "lattice_points": self.lattice_points,
            "survivors": self.survivors,
            "w9": self.w9,
            "cell_exponent": self.cell_exponent,
            "truth_present": self.truth_present,
            "seconds": round(self.seconds, 6),
        }


@dataclass
class AttackResult:
    candidates: CandidateSet
    stages: list[StageLog] = field(default_factory=list)
    polygon_sets: list[PolygonSet] = field(default_factory=list)
    piece_rounds: list[tuple[int, list[CellPiece]]] = field(default_factory=list)
    wall_seconds: float = 0.0

    def to_report(self, params: ScrambleParams, config: AttackConfig) -> dict:
        """The JSON report document."""
        return {
            "params": params.as_dict(),
            "config": config.as_dict(),
            "stages": [stage.as_dict() for stage in self.stages],
            "candidates": len(self.candidates),
            "wall_seconds": round(self.wall_seconds, 6),
        }
