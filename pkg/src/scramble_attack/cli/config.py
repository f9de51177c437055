"""Settings for the command line: built-in defaults < TOML file < flags.

The TOML file has two optional tables::

    [scramble]
    n = 1023
    half_width_bits = 12

    [attack]
    p1_pairs = 5
    cell_exponents = [8, 6, 4, 2]
"""

import argparse
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict

from tomlkit import parse
from tomlkit.exceptions import TOMLKitError

from scramble_attack.attack_engine.types import AttackConfig
from scramble_attack.errors import InvalidParametersError, MalformedInputError
from scramble_attack.legacy_auth.prng import ScrambleParams

SCRAMBLE_TABLE = "scramble"
ATTACK_TABLE = "attack"

# flag destination -> ScrambleParams field
SCRAMBLE_FLAGS = {"modulus": "n", "rounds": "rounds", "half_width_bits": "half_width_bits"}
# flag destination -> AttackConfig field
ATTACK_FLAGS = {
    "p1_pairs": "p1_pairs",
    "cells": "cell_exponents",
    "budget": "sieve_budget",
    "stop_when_unique": "stop_when_unique",
    "workers": "workers",
    "refine_floor": "refine_floor",
}


def read_toml(toml_fpath: Path) -> Dict[str, Any]:
    """Read the contents of the TOML file and parse as dict."""
    try:
        return parse(toml_fpath.read_text(encoding="utf-8")).unwrap()
    except TOMLKitError as err:
        raise MalformedInputError(f"{toml_fpath}: {err}") from err


def load_settings(config_fpath: Path | None) -> Dict[str, Dict[str, Any]]:
    """Return the ``[scramble]`` and ``[attack]`` tables, empty when there is no file."""
    if config_fpath is None:
        return {SCRAMBLE_TABLE: {}, ATTACK_TABLE: {}}

    contents = read_toml(config_fpath)
    unknown_tables = set(contents) - {SCRAMBLE_TABLE, ATTACK_TABLE}
    if unknown_tables:
        raise InvalidParametersError(f"{config_fpath}: unknown tables {sorted(unknown_tables)}")
    return {
        SCRAMBLE_TABLE: dict(contents.get(SCRAMBLE_TABLE, {})),
        ATTACK_TABLE: dict(contents.get(ATTACK_TABLE, {})),
    }


def _merge(dataclass_type: type, from_file: Dict[str, Any], args: argparse.Namespace, flags: Dict[str, str]) -> dict:
    allowed = {f.name for f in fields(dataclass_type)}
    unknown = set(from_file) - allowed
    if unknown:
        raise InvalidParametersError(f"unknown {dataclass_type.__name__} settings {sorted(unknown)}")

    merged = dict(from_file)
    for dest, field_name in flags.items():
        value = getattr(args, dest, None)
        if value is not None:
            merged[field_name] = value
    return merged


def resolve_params(args: argparse.Namespace, settings: Dict[str, Dict[str, Any]]) -> ScrambleParams:
    return ScrambleParams(**_merge(ScrambleParams, settings[SCRAMBLE_TABLE], args, SCRAMBLE_FLAGS))


def resolve_attack_config(args: argparse.Namespace, settings: Dict[str, Dict[str, Any]]) -> AttackConfig:
    return AttackConfig(**_merge(AttackConfig, settings[ATTACK_TABLE], args, ATTACK_FLAGS))
