"""Framed handshake captures in the legacy wire layout.

Every packet is a 3-byte little-endian payload length, a 1-byte sequence number and the payload.
A session is a server greeting (sequence 0) followed by the client's auth packet (sequence 1).
Only the fields the attack needs are interpreted; trailing payload bytes are ignored.
"""

import struct
from typing import Iterable, Sequence

from scramble_attack.capture_io.consts import (
    AUTH_SEQUENCE,
    CLIENT_FLAGS,
    GREETING_SEQUENCE,
    MAX_PACKET_SIZE,
    PACKET_HEADER_SIZE,
    PROTOCOL_VERSION,
    SERVER_VERSION,
)
from scramble_attack.capture_io.sessions import TraceRecord
from scramble_attack.errors import CaptureParseError, MalformedInputError
from scramble_attack.legacy_auth.challenges import CHALLENGE_LENGTH
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.types import Response


def _uint24_le(value: int) -> bytes:
    return struct.pack("<I", value)[:3]


def _packet(sequence: int, payload: bytes) -> bytes:
    return _uint24_le(len(payload)) + bytes([sequence]) + payload


def greeting_payload(challenge: bytes, thread_id: int) -> bytes:
    return bytes([PROTOCOL_VERSION]) + SERVER_VERSION + b"\0" + struct.pack("<I", thread_id) + challenge + b"\0"


def username_bytes(username: str) -> bytes:
    """UTF-8 form of a username as it travels NUL-terminated.

    Raises:
        MalformedInputError: the name holds a NUL or does not encode as UTF-8.
    """
    if "\0" in username:
        raise MalformedInputError(f"username {username!r} contains NUL")
    try:
        return username.encode("utf-8")
    except UnicodeEncodeError as err:
        raise MalformedInputError(f"username {username!r} is not valid UTF-8: {err}") from err


def auth_payload(username: str, response: bytes) -> bytes:
    header = struct.pack("<H", CLIENT_FLAGS) + _uint24_le(MAX_PACKET_SIZE)
    return header + username_bytes(username) + b"\0" + response + b"\0"


def emit_capture(records: Sequence[TraceRecord], usernames: Sequence[str], first_thread_id: int = 1) -> bytes:
    """Serialise one greeting and one auth packet per record."""
    if len(records) != len(usernames):
        raise MalformedInputError(f"got {len(records)} records but {len(usernames)} usernames")

    chunks = []
    for offset, (record, username) in enumerate(zip(records, usernames, strict=True)):
        chunks.append(_packet(GREETING_SEQUENCE, greeting_payload(record.challenge_text, first_thread_id + offset)))
        chunks.append(_packet(AUTH_SEQUENCE, auth_payload(username, record.response)))
    return b"".join(chunks)


class PacketReader:
    """Cursor over one packet payload; errors report absolute offsets in the capture."""

    def __init__(self, payload: bytes, base_offset: int) -> None:
        self.payload = payload
        self.base_offset = base_offset
        self.pos = 0

    @property
    def offset(self) -> int:
        return self.base_offset + self.pos

    def read_bytes(self, count: int, what: str) -> bytes:
        if self.pos + count > len(self.payload):
            raise CaptureParseError(f"packet ends inside {what}", self.base_offset + len(self.payload))
        data = self.payload[self.pos : self.pos + count]
        self.pos += count
        return data

    def read_byte(self, what: str) -> int:
        return self.read_bytes(1, what)[0]

    def read_uint(self, size: int, what: str) -> int:
        return int.from_bytes(self.read_bytes(size, what), "little")

    def read_null_terminated(self, what: str) -> bytes:
        end = self.payload.find(b"\0", self.pos)
        if end < 0:
            raise CaptureParseError(f"missing NUL after {what}", self.offset)
        data = self.payload[self.pos : end]
        self.pos = end + 1
        return data

    def expect_nul(self, what: str) -> None:
        at = self.offset
        if self.read_byte(what) != 0:
            raise CaptureParseError(f"missing NUL after {what}", at)


def _iter_packets(capture: bytes) -> Iterable[tuple[int, int, PacketReader]]:
    pos = 0
    while pos < len(capture):
        if pos + PACKET_HEADER_SIZE > len(capture):
            raise CaptureParseError("truncated packet header", pos)
        length = int.from_bytes(capture[pos : pos + 3], "little")
        sequence = capture[pos + 3]
        start = pos + PACKET_HEADER_SIZE
        if start + length > len(capture):
            raise CaptureParseError(f"truncated packet: {length} bytes announced, {len(capture) - start} left", pos)
        yield pos, sequence, PacketReader(capture[start : start + length], start)
        pos = start + length


def _expect_sequence(sequence: int, expected: int, pos: int) -> None:
    if sequence != expected:
        raise CaptureParseError(f"expected sequence number {expected}, got {sequence}", pos + 3)


def parse_capture(capture: bytes, params: ScrambleParams) -> list[tuple[str, TraceRecord]]:
    """Decode ``(username, record)`` per session.

    Raises:
        CaptureParseError: truncation, a missing NUL, an unexpected packet, a username that is not
            UTF-8, or a response byte outside the digit range, with the offending offset.
    """
    sessions = []
    packets = iter(_iter_packets(capture))
    for pos, sequence, greeting in packets:
        _expect_sequence(sequence, GREETING_SEQUENCE, pos)
        at = greeting.offset
        if (version := greeting.read_byte("protocol version")) != PROTOCOL_VERSION:
            raise CaptureParseError(f"unsupported protocol version {version}", at)
        greeting.read_null_terminated("server version")
        greeting.read_uint(4, "thread id")
        challenge = greeting.read_bytes(CHALLENGE_LENGTH, "challenge")
        greeting.expect_nul("challenge")

        auth_packet = next(packets, None)
        if auth_packet is None:
            raise CaptureParseError("greeting without an auth packet", len(capture))
        pos, sequence, auth = auth_packet
        _expect_sequence(sequence, AUTH_SEQUENCE, pos)
        auth.read_uint(2, "client flags")
        auth.read_uint(3, "max packet size")
        username_offset = auth.offset
        try:
            username = auth.read_null_terminated("username").decode("utf-8")
        except UnicodeDecodeError as err:
            raise CaptureParseError(f"username is not valid UTF-8: {err.reason}", username_offset + err.start) from err
        response_offset = auth.offset
        response = auth.read_bytes(params.rounds, "response")
        auth.expect_nul("response")
        try:
            Response.from_bytes(response, params)
        except MalformedInputError as err:
            raise CaptureParseError(str(err), response_offset) from err

        sessions.append((username, TraceRecord(challenge, response)))
    return sessions
