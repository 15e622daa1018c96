import pathlib

import pytest

STRUCTURES = pathlib.Path(__file__).resolve().parent.parent / "structures"


@pytest.fixture(scope="session")
def structures_dir() -> pathlib.Path:
    return STRUCTURES
