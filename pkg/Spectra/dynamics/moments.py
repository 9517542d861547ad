"""
    exact moments of the weakly singular kernel k(tau) = exp(-i a tau) / sqrt(pi tau)

        G0(T) = int_0^T k(tau) dtau        = erf(sqrt(i a T)) / sqrt(i a)
        G1(T) = int_0^T tau k(tau) dtau    = (G0 / 2 - sqrt(T/pi) exp(-i a T)) / (i a)

    erf of a complex argument comes from scipy.special (Faddeeva based, accurate
    to a few ulp of |erf| on the diagonal rays used here). For |a| T <= 1 the
    power series is used instead; it avoids the 1/a cancellation in G1.
"""
import math

import numpy as np
from scipy import special

SERIES_LIMIT = 1.0
SERIES_TERMS = 30


def _sqrt_i(a):
    """
        principal sqrt(i a) for real a
    """
    root = math.sqrt(abs(a))
    return complex(root, root) * math.sqrt(0.5) if a > 0 else complex(root, -root) * math.sqrt(0.5)


def _series(a, tau):
    z = -1j * a * tau
    term = np.ones_like(z)
    s0 = np.zeros_like(z)
    s1 = np.zeros_like(z)
    for k in range(SERIES_TERMS):
        s0 += term / (k + 0.5)
        s1 += term / (k + 1.5)
        term = term * z / (k + 1)
    root = np.sqrt(tau / np.pi)
    return root * s0, tau * root * s1


def cumulative_moments(a: float, tau):
    """
        G0 and G1 at every node of tau (non-negative, increasing)
    """
    tau = np.asarray(tau, dtype=float)
    g0 = np.zeros(tau.shape, dtype=complex)
    g1 = np.zeros(tau.shape, dtype=complex)
    small = np.abs(a) * tau <= SERIES_LIMIT
    if np.any(small):
        g0[small], g1[small] = _series(a, tau[small].astype(complex))
    large = ~small
    if np.any(large):
        t = tau[large]
        ia_root = _sqrt_i(a)
        g0[large] = special.erf(ia_root * np.sqrt(t)) / ia_root
        g1[large] = (0.5 * g0[large] - np.sqrt(t / np.pi) * np.exp(-1j * a * t)) / (1j * a)
    return g0, g1


def panel_weights(a: float, h: float, n_panels: int):
    """
        product-integration weights over panels [m h, (m+1) h], m = 0..n_panels-1,
        for a linear interpolant of the smooth factor

        A[m] multiplies the older node y(t - (m+1) h), B[m] the newer node y(t - m h)
    """
    tau = h * np.arange(n_panels + 1)
    g0, g1 = cumulative_moments(a, tau)
    i0 = np.diff(g0)
    i1 = np.diff(g1)
    left = tau[:-1]
    older = (i1 - left * i0) / h
    newer = ((left + h) * i0 - i1) / h
    return older, newer


def memory_weights(branches, h: float, n_panels: int):
    """
        panel weights of K(tau) = sum_n w_n exp(-i a_n tau) / sqrt(pi tau)
        for branches given as (w_n, a_n)
    """
    older = np.zeros(n_panels, dtype=complex)
    newer = np.zeros(n_panels, dtype=complex)
    for weight, a in branches:
        a_m, b_m = panel_weights(a, h, n_panels)
        older += weight * a_m
        newer += weight * b_m
    return older, newer
