import pytest
from tomlkit import parse

from tests.consts import PROJECT_DIR


@pytest.fixture(scope="module")
def poe_tasks() -> dict:
    return parse((PROJECT_DIR / "pyproject.toml").read_text(encoding="utf-8")).unwrap()["tool"]["poe"]["tasks"]


def test__lint_runs_tools_the_repo_ships(poe_tasks: dict):
    script = poe_tasks["lint"].get("shell") or poe_tasks["lint"]["cmd"]
    if "pre-commit" in script:
        assert (PROJECT_DIR / ".pre-commit-config.yaml").exists()
    for tool in ("ruff check", "ruff format --check", "mypy"):
        assert tool in script


def test__lint_tools_are_dev_dependencies():
    dev = parse((PROJECT_DIR / "pyproject.toml").read_text(encoding="utf-8")).unwrap()["dependency-groups"]["dev"]
    names = {requirement.split(">")[0].split("=")[0].split("[")[0] for requirement in dev}
    assert {"ruff", "mypy", "pytest"} <= names
