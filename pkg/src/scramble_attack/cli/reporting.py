"""Human-readable attack summary."""

from rich.console import Console
from rich.table import Table

from scramble_attack.attack_engine.types import AttackResult


def _cell(value: object) -> str:
    return "" if value is None else str(value)


def stage_table(result: AttackResult) -> Table:
    table = Table(title=f"Attack stages ({len(result.candidates)} candidates, {result.wall_seconds:.2f}s)")
    for column in ("stage", "polygons", "pieces", "lattice points", "survivors", "m", "w9", "truth", "seconds"):
        table.add_column(column, justify="left" if column == "stage" else "right")
    for stage in result.stages:
        table.add_row(
            stage.name,
            _cell(stage.polygons),
            _cell(stage.pieces),
            _cell(stage.lattice_points),
            _cell(stage.survivors),
            _cell(stage.cell_exponent),
            _cell(stage.w9),
            _cell(stage.truth_present),
            f"{stage.seconds:.3f}",
        )
    return table


def print_summary(result: AttackResult, console: Console | None = None) -> None:
    (console or Console(stderr=True)).print(stage_table(result))
