"""
    non-Markovian reservoir models

    every quantity is expressed in units of the coupling constant beta.
    a reservoir is reduced to a short list of branches (weight w_n, band edge e_n):

        K~(s) = sum_n w_n / sqrt(s + i e_n)
        K(t)  = sum_n w_n exp(-i e_n t) / sqrt(pi t)

    square roots are principal (cut on the negative real axis); boundary values on
    the imaginary axis are the eps -> 0+ limits from the right half-plane.
"""
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import integrate

from Spectra.utils.errors import ContractError

SQRT_I = complex(math.sqrt(0.5), math.sqrt(0.5))          # e^{+i pi/4}
INV_SQRT_I = complex(math.sqrt(0.5), -math.sqrt(0.5))     # e^{-i pi/4}

# returned on the imaginary axis exactly at a band edge
KERNEL_DIVERGENCE = complex(math.inf, 0.0)

KINDS = ("none", "single", "double")
KIND_NAMES = {
    "none": "None",
    "single": "SingleBandIsotropic",
    "double": "DoubleBandIsotropic",
}


@dataclass(frozen=True)
class ReservoirModel:
    """
        photonic reservoir: band structure and coupling

        kind:     none | single | double
        beta:     resonant coupling constant (>= 0)
        delta_g1: lower band edge detuning (double band only)
        delta_g2: upper band edge detuning (double band), or the single edge
    """
    kind: str = "none"
    beta: float = 1.0
    delta_g1: Optional[float] = None
    delta_g2: Optional[float] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown reservoir kind '{}', expected one of {}".format(self.kind, KINDS))
        if not (math.isfinite(self.beta) and self.beta >= 0):
            raise ValueError("beta must be finite and >= 0, got {}".format(self.beta))
        if self.kind == "double":
            if self.delta_g1 is None or self.delta_g2 is None:
                raise ValueError("double-band reservoir needs delta_g1 and delta_g2")
            if not self.delta_g1 < self.delta_g2:
                raise ValueError("gap width must be positive")
        if self.kind == "single" and self.delta_g2 is None:
            raise ValueError("single-band reservoir needs its band edge delta_g")

    @classmethod
    def none(cls):
        return cls(kind="none")

    @classmethod
    def single(cls, delta_g, beta=1.0):
        return cls(kind="single", beta=float(beta), delta_g2=float(delta_g))

    @classmethod
    def double(cls, delta_g1, delta_g2, beta=1.0):
        return cls(kind="double", beta=float(beta), delta_g1=float(delta_g1), delta_g2=float(delta_g2))

    @property
    def name(self):
        return KIND_NAMES[self.kind]

    @property
    def delta_g(self):
        """
            the single band edge
        """
        return self.delta_g2

    @property
    def edges(self) -> Tuple[float, ...]:
        if self.kind == "double":
            return (self.delta_g1, self.delta_g2)
        if self.kind == "single":
            return (self.delta_g2,)
        return ()

    def phased_branches(self) -> Tuple[Tuple[float, int, float], ...]:
        """
            (magnitude, phase, edge) per branch, phase in units of pi/4
            the double band splits the coupling evenly between its edges,
            a lone upper band carries the full weight
        """
        coupling = self.beta ** 1.5
        if self.kind == "double":
            return ((0.5 * coupling, 1, self.delta_g1), (0.5 * coupling, -1, self.delta_g2))
        if self.kind == "single":
            return ((coupling, -1, self.delta_g2),)
        return ()

    def branches(self) -> Tuple[Tuple[complex, float], ...]:
        """
            (weight, edge) pairs of the kernel
        """
        return tuple((magnitude * (SQRT_I if phase > 0 else INV_SQRT_I), edge)
                     for magnitude, phase, edge in self.phased_branches())

    def describe(self):
        return dict(kind=self.kind, beta=self.beta, delta_g1=self.delta_g1, delta_g2=self.delta_g2)


def kernel_branches(model: ReservoirModel):
    """
        (weight, edge) pairs feeding the kernel and the time-domain solver;
        empty without a reservoir or at zero coupling
    """
    if model.beta == 0:
        return ()
    return model.branches()


def _as_array(value, dtype):
    arr = np.asarray(value, dtype=dtype)
    return np.atleast_1d(arr), arr.ndim == 0


def _unwrap(arr, scalar):
    return arr[0] if scalar else arr


def is_divergent(value):
    """
        True where a kernel value is the band-edge sentinel
    """
    return np.isinf(np.real(value))


def density_of_modes(model: ReservoirModel, omega_detuning):
    """
        rho at omega - omega_21; zero inside the gap, +inf exactly at a band edge
    """
    if model.kind == "none":
        raise ValueError("no non-Markovian reservoir configured")
    x, scalar = _as_array(omega_detuning, float)
    rho = np.zeros_like(x)
    with np.errstate(divide="ignore"):
        if model.kind == "double":
            below = x <= model.delta_g1
            rho[below] += 1.0 / np.sqrt(model.delta_g1 - x[below])
        above = x >= model.delta_g2
        rho[above] += 1.0 / np.sqrt(x[above] - model.delta_g2)
    rho /= 2.0 * np.pi
    return _unwrap(rho, scalar)


def kernel_laplace(model: ReservoirModel, s):
    """
        K~(s) for Re(s) >= 0
    """
    s_arr, scalar = _as_array(s, complex)
    if np.any(s_arr.real < 0):
        raise ValueError("kernel_laplace is defined for Re(s) >= 0 only")
    value = np.zeros_like(s_arr)
    for weight, edge in kernel_branches(model):
        shifted = s_arr + 1j * edge
        if np.any(shifted == 0):
            raise ContractError("band-edge divergence at s = {}".format(-1j * edge))
        value += weight / np.sqrt(shifted)
    return _unwrap(value, scalar)


def kernel_laplace_derivative(model: ReservoirModel, s):
    """
        dK~/ds = -1/2 sum_n w_n (s + i e_n)^(-3/2)
    """
    s_arr, scalar = _as_array(s, complex)
    if np.any(s_arr.real < 0):
        raise ValueError("kernel_laplace_derivative is defined for Re(s) >= 0 only")
    value = np.zeros_like(s_arr)
    for weight, edge in kernel_branches(model):
        shifted = s_arr + 1j * edge
        if np.any(shifted == 0):
            raise ContractError("band-edge divergence at s = {}".format(-1j * edge))
        value += -0.5 * weight / (shifted * np.sqrt(shifted))
    return _unwrap(value, scalar)


def _axis_terms(model, delta):
    """
        yields (term, offset, edge mask) per branch, where offset = e_n - delta
        and term = w_n / sqrt(i * offset)

        sqrt(i x) = sqrt|x| e^{+-i pi/4}, so the total phase of a term is a whole
        quarter turn and its parts are set exactly: |w| / sqrt|x| times 1, -i or +i
    """
    for magnitude, phase, edge in model.phased_branches():
        offset = edge - delta
        hit = offset == 0
        turn = phase + np.where(offset > 0, -1, 1)
        with np.errstate(divide="ignore", invalid="ignore"):
            size = magnitude / np.sqrt(np.abs(offset))
        term = np.zeros(offset.shape, dtype=complex)
        term.real = np.where(turn == 0, size, 0.0)
        term.imag = np.where(turn == 2, size, np.where(turn == -2, -size, 0.0))
        yield term, offset, hit


def kernel_laplace_on_axis(model: ReservoirModel, delta):
    """
        lim_{eps -> 0+} K~(eps - i delta)

        Re >= 0 outside the gap (decay), Re == 0 inside it (pure shift);
        exactly at a band edge the value is KERNEL_DIVERGENCE
    """
    d, scalar = _as_array(delta, float)
    value = np.zeros(d.shape, dtype=complex)
    divergent = np.zeros(d.shape, dtype=bool)
    for term, _, hit in _axis_terms(model, d):
        divergent |= hit
        value[~hit] += term[~hit]
    value[divergent] = KERNEL_DIVERGENCE
    return _unwrap(value, scalar)


def kernel_laplace_on_axis_derivative(model: ReservoirModel, delta):
    """
        d/d(delta) of the boundary value, i.e. -i K~'(-i delta)
    """
    d, scalar = _as_array(delta, float)
    value = np.zeros(d.shape, dtype=complex)
    divergent = np.zeros(d.shape, dtype=bool)
    for term, offset, hit in _axis_terms(model, d):
        divergent |= hit
        ok = ~hit
        # d/d delta [w (i x)^(-1/2)] with x = e - delta  ->  w (i x)^(-1/2) / (2 x)
        value[ok] += 0.5 * term[ok] / offset[ok]
    value[divergent] = KERNEL_DIVERGENCE
    return _unwrap(value, scalar)


def kernel_time(model: ReservoirModel, t):
    """
        memory kernel K(t) for t > 0
    """
    t_arr, scalar = _as_array(t, float)
    if np.any(t_arr <= 0):
        raise ValueError("kernel_time requires t > 0")
    value = np.zeros(t_arr.shape, dtype=complex)
    for weight, edge in kernel_branches(model):
        value += weight * np.exp(-1j * edge * t_arr)
    value /= np.sqrt(np.pi * t_arr)
    return _unwrap(value, scalar)


def laplace_quadrature(model: ReservoirModel, s, t_max=None, limit=2000):
    """
        numerical Laplace transform of kernel_time

        with t = u^2 the integrand (2/sqrt(pi)) sum_n w_n exp(-(s + i e_n) u^2)
        is smooth; quad is run on real and imaginary parts separately.
        t_max=None integrates until exp(-Re(s) t) < e^-60.
    """
    s = complex(s)
    if t_max is None:
        if s.real <= 0:
            raise ValueError("untruncated quadrature needs Re(s) > 0")
        t_max = 60.0 / s.real
    branches = kernel_branches(model)
    if not branches:
        return 0j

    def integrand(u):
        total = 0j
        for weight, edge in branches:
            total += weight * np.exp(-(s + 1j * edge) * u * u)
        return 2.0 / math.sqrt(math.pi) * total

    upper = math.sqrt(t_max)
    options = dict(limit=limit, epsabs=1e-13, epsrel=1e-11)
    re, _ = integrate.quad(lambda u: integrand(u).real, 0.0, upper, **options)
    im, _ = integrate.quad(lambda u: integrand(u).imag, 0.0, upper, **options)
    return complex(re, im)
