from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("pkg", deadline=None)
settings.load_profile("pkg")

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture(scope="session")
def corpus() -> Path:
    return CORPUS
