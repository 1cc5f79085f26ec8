import importlib.util
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def table_deriver():
    """The geometric cubie-model script, loaded as the independent oracle
    for the frozen permutation tables."""
    path = REPO_ROOT / "tools" / "derive_cube_tables.py"
    spec = importlib.util.spec_from_file_location("derive_cube_tables", path)
    module = importlib.util.module_from_spec(spec)
    sys.modules.setdefault("derive_cube_tables", module)
    spec.loader.exec_module(module)
    return module


# Published puzzle/solution pair from the public 1M-sudoku dump, used as a
# known-good fixture across the sudoku, corpus, and evaluator tests.
SAMPLE_SUDOKU_PUZZLE = (
    "004300209005009001070060043006002087190007400050083000600000105003508690042910300"
)
SAMPLE_SUDOKU_SOLUTION = (
    "864371259325849761971265843436192587198657432257483916689734125713528694542916378"
)
