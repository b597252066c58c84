import numpy as np
import pytest
from hypothesis import settings

from planehomeo import Cell2, MetricConfig

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def cell():
    return Cell2.standard(0.0, 0.25, 0.1)


@pytest.fixture
def small_cfg():
    return MetricConfig(N=40, radial_samples=32, angular_samples=32)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
