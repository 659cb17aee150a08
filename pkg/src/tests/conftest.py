import random

import pytest

from classes.cache import Cache


@pytest.fixture(scope="session")
def cache():
    # In-memory only; hit spaces are shared by every test of the session
    return Cache(directory=None)


@pytest.fixture
def rng():
    return random.Random(20240601)
