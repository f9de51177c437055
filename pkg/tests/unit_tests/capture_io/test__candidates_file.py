from pathlib import Path

import pytest

from scramble_attack.capture_io.candidates_file import read_candidates, write_candidates
from scramble_attack.errors import MalformedInputError
from scramble_attack.legacy_auth.types import HashHalves


def test__candidates_are_written_sorted(tmp_artifacts_dir: Path):
    path = write_candidates([HashHalves(2, 0), HashHalves(1, 0xFFFFFFFF)], tmp_artifacts_dir / "candidates.txt")
    assert path.read_text() == "00000001:ffffffff\n00000002:00000000\n"
    assert read_candidates(path) == [HashHalves(1, 0xFFFFFFFF), HashHalves(2, 0)]


def test__comments_are_allowed(tmp_artifacts_dir: Path):
    path = tmp_artifacts_dir / "candidates.txt"
    path.write_text("# survivors\n00000002:00000000\n\n00000001:00000000\n")
    assert read_candidates(path) == [HashHalves(1, 0), HashHalves(2, 0)]


def test__bad_line_is_reported(tmp_artifacts_dir: Path):
    path = tmp_artifacts_dir / "candidates.txt"
    path.write_text("00000001:00000000\nnot-a-hash\n")
    with pytest.raises(MalformedInputError) as err:
        read_candidates(path)
    assert str(err.value).startswith("line 2: ")
