import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cubicspec import catalog, enumerate_cubic
from cubicspec.verify import find_cospectral_mate, petersen_path_truncation


@pytest.fixture(scope="session")
def corpus16_timed():
    """Order-16 corpus plus its build time (charged to the scan criterion)."""
    start = time.monotonic()
    graphs = list(enumerate_cubic(16))
    return graphs, time.monotonic() - start


@pytest.fixture(scope="session")
def corpus16(corpus16_timed):
    return corpus16_timed[0]


@pytest.fixture(scope="session")
def small_corpora():
    """Connected cubic classes for orders 4..12, keyed by order."""
    return {n: list(enumerate_cubic(n)) for n in (4, 6, 8, 10, 12)}


@pytest.fixture(scope="session")
def headline_pair(corpus16):
    """The order-16 cospectral pair: (partial truncation, its mate)."""
    h = petersen_path_truncation()
    return h, find_cospectral_mate(h, corpus16)


@pytest.fixture
def petersen():
    return catalog("petersen")


@pytest.fixture
def k4():
    return catalog("K4")
