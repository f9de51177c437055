import logging

from rich.console import Console
from rich.logging import RichHandler

VERBOSITY_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def configure_logging(verbosity: int) -> None:
    """Route all log records to stderr through rich; ``-v`` is INFO, ``-vv`` DEBUG."""
    level = VERBOSITY_LEVELS.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
