"""``scramble-attack``: legacy scramble primitives, trace tooling and the eavesdropper attack.

Exit status is 0 on success, 1 when a verification fails or the attack ends with nothing,
and 2 for usage errors and malformed input.
"""

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Callable, Sequence

from scramble_attack.attack_engine.orchestrator import run_attack
from scramble_attack.attack_engine.scoring import mean_rate, score_candidates
from scramble_attack.capture_io.candidates_file import read_candidates, write_candidates
from scramble_attack.capture_io.sessions import generate_sessions, password_halves, records_to_pairs
from scramble_attack.capture_io.trace_file import format_trace, read_trace, write_trace
from scramble_attack.capture_io.wire_capture import emit_capture, parse_capture
from scramble_attack.cli.config import load_settings, resolve_attack_config, resolve_params
from scramble_attack.cli.logging_setup import configure_logging
from scramble_attack.cli.reporting import print_summary
from scramble_attack.cli.svg_figures import write_attack_figures
from scramble_attack.errors import (
    EnumerationBudgetExceededError,
    MalformedInputError,
    NoPolygonError,
    ScrambleAttackError,
)
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.scramble import challenge_halves, scramble, verify
from scramble_attack.legacy_auth.types import HashHalves, Response
from scramble_attack.path_utils import write_bytes_atomic, write_text_atomic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BAD_INPUT = 2

POWER_PATTERN = re.compile(r"^\s*(\d+)\s*(?:\^|\*\*)\s*(\d+)\s*$")


def parse_budget(text: str) -> int:
    """Accept ``16777216``, ``2^24`` or ``2**24``."""
    match = POWER_PATTERN.match(text)
    if match:
        return int(match.group(1)) ** int(match.group(2))
    try:
        return int(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected an integer or 'b^e', got {text!r}") from err


def parse_cells(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from err


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="TOML file with [scramble] and [attack] tables")
    common.add_argument("--modulus", type=int, help="generator modulus n (default 2^30 - 1)")
    common.add_argument("--rounds", type=int, help="response length in bytes (default 8)")
    common.add_argument(
        "--width", dest="half_width_bits", type=int, help="bits per hash half kept as seed (default 32)"
    )
    common.add_argument("--seed", type=int, default=0, help="random seed for challenges (default 0)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="scramble-attack", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    hash_cmd = commands.add_parser("hash", parents=[common], help="print the stored hash of a password")
    hash_cmd.add_argument("password")
    hash_cmd.set_defaults(handler=cmd_hash)

    for name, handler, help_text in (
        ("scramble", cmd_scramble, "print the response to a challenge"),
        ("verify", cmd_verify, "check a response the way the server does"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        secret = sub.add_mutually_exclusive_group(required=True)
        secret.add_argument("--password")
        secret.add_argument("--password-hash", help="stored hash as h1:h2")
        challenge = sub.add_mutually_exclusive_group(required=True)
        challenge.add_argument("--challenge", help="challenge text")
        challenge.add_argument("--challenge-hex", help="challenge bytes as hex")
        if name == "verify":
            sub.add_argument("--response", required=True, help="response bytes as hex")
        sub.set_defaults(handler=handler)

    gen = commands.add_parser("gen", parents=[common], help="simulate logins of one user")
    gen.add_argument("--password", required=True)
    gen.add_argument("--count", type=int, default=10)
    gen.add_argument("--out", type=Path, help="trace file (stdout when omitted)")
    gen.add_argument("--capture", type=Path, help="also write the framed handshake capture")
    gen.add_argument("--username", default="root")
    gen.set_defaults(handler=cmd_gen)

    parse = commands.add_parser("parse", parents=[common], help="convert a handshake capture into a trace")
    parse.add_argument("--capture", type=Path, required=True)
    parse.add_argument("--out", type=Path, help="trace file (stdout when omitted)")
    parse.set_defaults(handler=cmd_parse)

    attack = commands.add_parser("attack", parents=[common], help="recover password hashes from a trace")
    attack.add_argument("--trace", type=Path, required=True)
    attack.add_argument("--p1-pairs", type=int, help="pairs given to Procedure 1 (default 5)")
    attack.add_argument("--cells", type=parse_cells, help="cell exponent schedule (default 24,20,16,12)")
    attack.add_argument("--budget", type=parse_budget, help="most lattice points to extract (default 2^24)")
    attack.add_argument(
        "--refine-floor", type=int, help="finest cell exponent refined to while over budget (default 6)"
    )
    attack.add_argument(
        "--stop-unique",
        dest="stop_when_unique",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="stop sieving once one candidate is left (default on)",
    )
    attack.add_argument("--workers", type=int, help="processes for Procedure 1 (default 1)")
    attack.add_argument("--out", type=Path, help="candidates file (stdout when omitted)")
    attack.add_argument("--svg", type=Path, help="directory for polygon drawings")
    attack.add_argument("--report", type=Path, help="JSON report path")
    attack.add_argument("--truth", help="known hash as h1:h2, tracked through every stage")
    attack.set_defaults(handler=cmd_attack)

    score = commands.add_parser("score", parents=[common], help="pass rates of candidates on fresh challenges")
    score.add_argument("--candidates", type=Path, required=True)
    score.add_argument("--truth", required=True, help="true hash as h1:h2")
    score.add_argument("--trials", type=int, default=1000)
    score.set_defaults(handler=cmd_score)

    return parser


def _secret(args: argparse.Namespace, params: ScrambleParams) -> HashHalves:
    if args.password is not None:
        return password_halves(args.password, params)
    return HashHalves.from_text(args.password_hash).fit(params)


def _challenge_text(args: argparse.Namespace) -> bytes:
    if args.challenge is not None:
        return args.challenge.encode()
    try:
        return bytes.fromhex(args.challenge_hex)
    except ValueError as err:
        raise MalformedInputError(f"challenge is not valid hex: {args.challenge_hex!r}") from err


def cmd_hash(args: argparse.Namespace, params: ScrambleParams) -> int:
    print(password_halves(args.password, params))
    return EXIT_OK


def cmd_scramble(args: argparse.Namespace, params: ScrambleParams) -> int:
    response = scramble(_secret(args, params), challenge_halves(_challenge_text(args), params), params)
    print(response)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, params: ScrambleParams) -> int:
    response = Response.from_hex(args.response, params)
    if verify(_secret(args, params), _challenge_text(args), response, params):
        print("match")
        return EXIT_OK
    print("mismatch")
    return EXIT_NEGATIVE


def cmd_gen(args: argparse.Namespace, params: ScrambleParams) -> int:
    if args.count < 0:
        raise MalformedInputError(f"--count must be non-negative, got {args.count}")
    records = generate_sessions(args.password, args.count, args.seed, params)
    write_trace(records, args.out if args.out is not None else sys.stdout)
    if args.capture is not None:
        write_bytes_atomic(args.capture, emit_capture(records, [args.username] * len(records)))
    logger.info("wrote %d sessions", len(records))
    return EXIT_OK


def cmd_parse(args: argparse.Namespace, params: ScrambleParams) -> int:
    records = [record for _, record in parse_capture(args.capture.read_bytes(), params)]
    if args.out is not None:
        write_trace(records, args.out)
    else:
        sys.stdout.write(format_trace(records))
    logger.info("parsed %d sessions from %s", len(records), args.capture)
    return EXIT_OK


def cmd_attack(args: argparse.Namespace, params: ScrambleParams) -> int:
    config = resolve_attack_config(args, args.settings)
    pairs = records_to_pairs(read_trace(args.trace, params), params)
    truth = HashHalves.from_text(args.truth).fit(params) if args.truth else None

    result = run_attack(pairs, config, params, truth=truth)

    if args.out is not None:
        write_candidates(result.candidates, args.out)
    else:
        sys.stdout.write("".join(f"{halves}\n" for halves in result.candidates))
    if args.report is not None:
        write_text_atomic(args.report, json.dumps(result.to_report(params, config), indent=2) + "\n")
    if args.svg is not None:
        written = write_attack_figures(result, params, args.svg)
        logger.info("wrote %d figures to %s", len(written), args.svg)
    print_summary(result)

    if len(result.candidates) == 0:
        logger.error("no candidate survived; the trace may mix users or be corrupted")
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_score(args: argparse.Namespace, params: ScrambleParams) -> int:
    candidates = read_candidates(args.candidates)
    truth = HashHalves.from_text(args.truth).fit(params)
    scores = score_candidates(candidates, truth, args.trials, args.seed, params)
    for score in scores:
        print(f"{score.candidate} {score.rate:.3f}")
    logger.info("mean pass rate over %d candidates: %.3f", len(scores), mean_rate(scores))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace, ScrambleParams], int] = args.handler

    try:
        args.settings = load_settings(args.config)
        params = resolve_params(args, args.settings)
        return handler(args, params)
    except (NoPolygonError, EnumerationBudgetExceededError) as err:
        logger.error("%s", err)
        return EXIT_NEGATIVE
    except (ValueError, ScrambleAttackError) as err:
        logger.error("%s", err)
        return EXIT_BAD_INPUT
    except OSError as err:
        logger.error("%s", err)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
