import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=50)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

SQRT2 = math.sqrt(2.0)

# Response matrix of the worked example and the Laplace matrix printed for it.
PAPER_LAMBDA = np.array([[2, 1, -3], [1, 2, -3], [-3, -3, 6]], dtype=complex)
PAPER_L = np.array(
    [
        [5 / 6 - 2 / 3 * SQRT2 * 1j, -1 / 6 - 2 / 3 * SQRT2 * 1j, -1 / 6 + 1 / 3 * SQRT2 * 1j, -1 / 2 + SQRT2 * 1j],
        [-1 / 6 - 2 / 3 * SQRT2 * 1j, 5 / 6 - 2 / 3 * SQRT2 * 1j, -1 / 6 + 1 / 3 * SQRT2 * 1j, -1 / 2 + SQRT2 * 1j],
        [-1 / 6 + 1 / 3 * SQRT2 * 1j, -1 / 6 + 1 / 3 * SQRT2 * 1j, 5 / 6 + 4 / 3 * SQRT2 * 1j, -1 / 2 - 2 * SQRT2 * 1j],
        [-1 / 2 + SQRT2 * 1j, -1 / 2 + SQRT2 * 1j, -1 / 2 - 2 * SQRT2 * 1j, 3 / 2],
    ]
)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def paper_lambda():
    return PAPER_LAMBDA.copy()


@pytest.fixture
def paper_laplace():
    return PAPER_L.copy()


@pytest.fixture
def paper_network():
    from acnet import network_from_laplace

    return network_from_laplace(PAPER_L, 3)


@pytest.fixture
def fixtures():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
