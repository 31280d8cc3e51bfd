import pytest

from chromabound.graphs import default_corpus


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()
