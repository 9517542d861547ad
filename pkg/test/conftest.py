"""
    shared fixtures
"""
import numpy as np
import pytest

from Spectra.models.reservoir import ReservoirModel


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long time-domain cross-validation runs")


def mirror_grid(half_width=5.0, half_points=1000):
    """
        grid with grid[i] == -grid[-1 - i] exactly
    """
    positive = np.linspace(0.0, half_width, half_points + 1)[1:]
    return np.concatenate([-positive[::-1], [0.0], positive])


@pytest.fixture
def symmetric_grid():
    return mirror_grid()


@pytest.fixture
def default_grid():
    return np.linspace(-5.0, 5.0, 2001)


FIG2A_GAPS = [(-1.0, 0.0), (-2.0, 0.0), (-3.0, 0.0)]
FIG2B_GAPS = [(-1.0, 1.0), (-2.0, 2.0), (-3.0, 3.0)]


def double(gap, beta=1.0):
    return ReservoirModel.double(gap[0], gap[1], beta=beta)
