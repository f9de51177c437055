"""Candidate files: one ``h1:h2`` per line, sorted; ``#`` comments allowed."""

from pathlib import Path
from typing import Iterable

from scramble_attack.errors import MalformedInputError
from scramble_attack.legacy_auth.types import HashHalves
from scramble_attack.path_utils import write_text_atomic


def write_candidates(candidates: Iterable[HashHalves], path: Path | str) -> Path:
    return write_text_atomic(path, "".join(f"{halves}\n" for halves in sorted(candidates)))


def read_candidates(path: Path | str) -> list[HashHalves]:
    halves = []
    for line_number, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            halves.append(HashHalves.from_text(line))
        except MalformedInputError as err:
            raise MalformedInputError(f"line {line_number}: {err}") from err
    return sorted(halves)
