import math

import numpy as np
import pytest
from scipy import integrate

import Spectra.dynamics.moments as moments
from Spectra.dynamics.moments import cumulative_moments, memory_weights, panel_weights


def quad_moment(a, T, power):
    # t = u^2 removes the 1/sqrt singularity
    def integrand(u, part):
        value = 2.0 / math.sqrt(math.pi) * u ** (2 * power) * np.exp(-1j * a * u * u)
        return value.real if part == "re" else value.imag

    options = dict(limit=500, epsabs=1e-13, epsrel=1e-12)
    re, _ = integrate.quad(integrand, 0.0, math.sqrt(T), args=("re",), **options)
    im, _ = integrate.quad(integrand, 0.0, math.sqrt(T), args=("im",), **options)
    return complex(re, im)


@pytest.mark.parametrize("a", [-3.0, -1.0, 0.0, 0.4, 2.0])
def test_moments_match_quadrature(a):
    tau = np.array([0.1, 0.5, 2.0, 7.0])
    g0, g1 = cumulative_moments(a, tau)
    for k, T in enumerate(tau):
        assert g0[k] == pytest.approx(quad_moment(a, T, 0), rel=1e-9, abs=1e-12)
        assert g1[k] == pytest.approx(quad_moment(a, T, 1), rel=1e-9, abs=1e-12)


def test_zero_frequency_closed_form():
    tau = np.array([0.0, 1.0, 4.0])
    g0, g1 = cumulative_moments(0.0, tau)
    np.testing.assert_allclose(g0, 2 * np.sqrt(tau / np.pi), rtol=1e-14)
    np.testing.assert_allclose(g1, 2 / 3 * tau ** 1.5 / np.sqrt(np.pi), rtol=1e-14)


@pytest.mark.parametrize("a", [-2.0, 0.7])
def test_series_and_erf_agree(a, monkeypatch):
    tau = np.linspace(0.05, 1.0 / abs(a), 9)
    monkeypatch.setattr(moments, "SERIES_LIMIT", 10.0)
    series = cumulative_moments(a, tau)
    monkeypatch.setattr(moments, "SERIES_LIMIT", 0.0)
    closed = cumulative_moments(a, tau)
    np.testing.assert_allclose(series[0], closed[0], rtol=1e-12)
    np.testing.assert_allclose(series[1], closed[1], rtol=1e-9)


@pytest.mark.parametrize("a", [-1.0, 0.0, 1.5])
def test_panel_weights_are_exact_for_linear_history(a):
    h, n = 0.05, 60
    older, newer = panel_weights(a, h, n)
    t = n * h
    tau = h * np.arange(n + 1)

    def y(s):
        return 1.0 + 2.0 * s

    quadrature = np.sum(older * y(t - tau[1:]) + newer * y(t - tau[:-1]))
    g0, g1 = cumulative_moments(a, np.array([t]))
    exact = (1.0 + 2.0 * t) * g0[0] - 2.0 * g1[0]
    assert quadrature == pytest.approx(exact, rel=1e-11)


def test_memory_weights_are_linear_in_branches():
    h, n = 0.1, 20
    w1, w2 = 0.3 + 0.1j, -0.7j
    older, newer = memory_weights(((w1, -1.0), (w2, 2.0)), h, n)
    o1, n1 = panel_weights(-1.0, h, n)
    o2, n2 = panel_weights(2.0, h, n)
    np.testing.assert_allclose(older, w1 * o1 + w2 * o2, rtol=1e-14)
    np.testing.assert_allclose(newer, w1 * n1 + w2 * n2, rtol=1e-14)
    assert not np.any(memory_weights((), h, n)[0])
