import random

import pytest
from hypothesis import settings

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("repo")


@pytest.fixture
def rng(request):
    # one stream per test, stable across runs
    return random.Random(request.node.nodeid)
