from pathlib import Path

import pytest

from flexmarket import toy_grid

REPO_ROOT = Path(__file__).resolve().parent.parent
TOY_GRID_PATH = REPO_ROOT / "scenarios" / "toy-grid.json"


@pytest.fixture
def toy():
    return toy_grid(10, 25)


@pytest.fixture
def toy_grid_path():
    return TOY_GRID_PATH
