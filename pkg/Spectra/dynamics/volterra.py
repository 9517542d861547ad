"""
    product-integration stepper for

        y'(t) = L y(t) + f - int_0^t K(t - s) y(s) ds,   K(tau) = sum_n w_n exp(-i a_n tau) / sqrt(pi tau)

    the memory integral uses exact panel moments against a piecewise-linear y; the
    newest value enters implicitly through the diagonal weight and is solved as a
    scalar linear equation each step.
"""
import cmath
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from loguru import logger
from tqdm import tqdm

from Spectra.dynamics.moments import memory_weights
from Spectra.utils.errors import SolverError

SCHEMES = ("exponential", "trapezoidal")


@dataclass(frozen=True)
class MemoryEquation:
    """
        rate:     L (complex)
        source:   constant forcing f
        branches: (w_n, a_n) kernel branches
        initial:  y(0)
    """
    rate: complex
    source: complex
    branches: Tuple[Tuple[complex, float], ...]
    initial: complex


def _phi(z):
    """
        phi1(z) = (e^z - 1)/z and phi2(z) = (e^z - 1 - z)/z^2
    """
    if abs(z) < 1e-3:
        phi1 = 1 + z / 2 + z * z / 6 + z ** 3 / 24
        phi2 = 0.5 + z / 6 + z * z / 24 + z ** 3 / 120
        return phi1, phi2
    ez = cmath.exp(z)
    return (ez - 1) / z, (ez - 1 - z) / (z * z)


def step_coefficients(rate: complex, h: float, scheme: str):
    """
        (E, p_old, p_new) with y[n+1] = E y[n] + p_old g[n] + p_new g[n+1],
        g being the non-linear part f - memory
    """
    z = rate * h
    if scheme == "exponential":
        phi1, phi2 = _phi(z)
        p_new = h * phi2
        return cmath.exp(z), h * phi1 - p_new, p_new
    if scheme == "trapezoidal":
        lhs = 1 - 0.5 * z
        return (1 + 0.5 * z) / lhs, 0.5 * h / lhs, 0.5 * h / lhs
    raise ValueError("unknown scheme '{}', expected one of {}".format(scheme, SCHEMES))


def integrate_memory(equation: MemoryEquation, t_max: float, steps: int,
                     scheme: str = "exponential", progress: bool = False):
    """
        returns (times, values) on the uniform grid t_k = k t_max / steps
    """
    h = t_max / steps
    times = np.linspace(0.0, t_max, steps + 1)
    y = np.zeros(steps + 1, dtype=complex)
    y[0] = equation.initial
    decay, p_old, p_new = step_coefficients(complex(equation.rate), h, scheme)
    source = complex(equation.source)

    has_memory = len(equation.branches) > 0
    if has_memory:
        older, newer = memory_weights(equation.branches, h, steps)
        diagonal = newer[0]
        # C_m = A_m + B_{m+1}, stored reversed so each history sum is a contiguous dot
        combined_rev = (older[:-1] + newer[1:])[::-1].copy()
        n_combined = combined_rev.size
    else:
        older = np.zeros(steps, dtype=complex)
        diagonal = 0j
    denom = 1 + p_new * diagonal
    if abs(denom) < 1e-12:
        raise SolverError("singular implicit step", dt=h)

    g = source
    for n in tqdm(range(steps), disable=not progress, desc="memory solve", leave=False):
        history = older[n] * y[0]
        if has_memory and n:
            history += np.dot(combined_rev[n_combined - n:], y[1:n + 1])
        y[n + 1] = (decay * y[n] + p_old * g + p_new * (source - history)) / denom
        if not cmath.isfinite(y[n + 1]):
            raise SolverError("non-finite amplitude at t = {:.4g}".format(times[n + 1]), dt=h)
        g = source - (diagonal * y[n + 1] + history)
    logger.debug("memory solve done: {} steps of {:.3e} ({} scheme, {} branches)",
                 steps, h, scheme, len(equation.branches))
    return times, y
