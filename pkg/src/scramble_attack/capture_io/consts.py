"""Wire and file format constants."""

PROTOCOL_VERSION = 10
SERVER_VERSION = b"3.22.32-log"
GREETING_SEQUENCE = 0
AUTH_SEQUENCE = 1
PACKET_HEADER_SIZE = 4
CLIENT_FLAGS = 0x0001  # long password
MAX_PACKET_SIZE = 0xFFFFFF

TRACE_COMMENT_PREFIX = "#"
