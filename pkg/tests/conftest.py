import numpy as np
import pytest

SEED = 20231


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run slow convergence tests",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "slow: marked tests refine grids and take a while",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(name='rng')
def rng_fixture():
    """Seeded generator, fresh for every test."""
    return np.random.default_rng(SEED)
