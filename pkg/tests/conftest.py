import pytest

from helpers import corpus


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(count=20, max_len=1024)
