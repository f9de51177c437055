"""Hex text traces: ``<challenge hex> <response hex>`` per line, ``#`` comments."""

import re
from pathlib import Path
from typing import Iterable, TextIO

from scramble_attack.capture_io.consts import TRACE_COMMENT_PREFIX
from scramble_attack.capture_io.sessions import TraceRecord
from scramble_attack.errors import MalformedInputError, TraceParseError
from scramble_attack.legacy_auth.challenges import CHALLENGE_LENGTH
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.types import Response
from scramble_attack.path_utils import write_text_atomic

LINE_PATTERN = re.compile(r"^([0-9a-fA-F]+) ([0-9a-fA-F]+)$")


def format_trace(records: Iterable[TraceRecord]) -> str:
    return "".join(f"{record.challenge_text.hex()} {record.response.hex()}\n" for record in records)


def write_trace(records: Iterable[TraceRecord], target: Path | str | TextIO) -> None:
    """Write ``records``; a path is replaced atomically."""
    text = format_trace(records)
    if isinstance(target, (str, Path)):
        write_text_atomic(target, text)
    else:
        target.write(text)


def _decode_hex(field: str, what: str, expected_bytes: int, line_number: int) -> bytes:
    if len(field) % 2:
        raise TraceParseError(f"{what} has an odd number of hex digits", line_number)
    data = bytes.fromhex(field)
    if len(data) != expected_bytes:
        raise TraceParseError(f"{what} must be {expected_bytes} bytes, got {len(data)}", line_number)
    return data


def parse_trace(text: str, params: ScrambleParams) -> list[TraceRecord]:
    records = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(TRACE_COMMENT_PREFIX):
            continue
        match = LINE_PATTERN.match(line)
        if not match:
            raise TraceParseError(f"expected '<challenge hex> <response hex>', got {raw!r}", line_number)

        challenge = _decode_hex(match.group(1), "challenge", CHALLENGE_LENGTH, line_number)
        response = _decode_hex(match.group(2), "response", params.rounds, line_number)
        try:
            Response.from_bytes(response, params)
        except MalformedInputError as err:
            raise TraceParseError(str(err), line_number) from err
        records.append(TraceRecord(challenge, response))
    return records


def read_trace(source: Path | str | TextIO, params: ScrambleParams) -> list[TraceRecord]:
    """Parse a trace.

    Raises:
        TraceParseError: naming the first bad line.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    return parse_trace(text, params)
