"""
    steady-state linear susceptibility of the weak probe on |0> <-> |2>

        c2(inf) = Omega / D,   D = d + i gamma/2 + i K~(-i d)
        chi     = -chi0 conj(c2(inf)) / Omega = -chi0 / conj(D)

    absorption is -Im chi, dispersion is Re chi
"""
import math
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from Spectra.datasets.series import Series
from Spectra.evaluate.contracts import verify_edge_zeros, verify_no_extra_zeros
from Spectra.models.grid import central_difference, snap_band_edges
from Spectra.models.reservoir import (ReservoirModel, is_divergent, kernel_laplace_on_axis,
                                      kernel_laplace_on_axis_derivative)

TRANSPARENCY_TOLERANCE = 2e-3


@dataclass(frozen=True)
class ProbeParams:
    """
        chi0 stands for 4 pi N |mu_02|^2 (arbitrary units)
    """
    gamma: float = 1.0
    reservoir: ReservoirModel = field(default_factory=ReservoirModel.none)
    chi0: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma >= 0):
            raise ValueError("gamma must be finite and >= 0, got {}".format(self.gamma))
        if not (math.isfinite(self.chi0) and self.chi0 > 0):
            raise ValueError("chi0 must be > 0, got {}".format(self.chi0))

    def describe(self):
        return dict(gamma=self.gamma, chi0=self.chi0, **self.reservoir.describe())


@dataclass(frozen=True, eq=False)
class ProbeResponse:
    grid: np.ndarray
    chi: np.ndarray
    absorption: np.ndarray
    dispersion: np.ndarray
    slope: np.ndarray
    transparency_points: Tuple[float, ...] = ()
    snapped_edges: Tuple[float, ...] = ()

    def to_series(self, metadata: Optional[dict] = None) -> Series:
        data = np.column_stack([self.grid, self.chi.real, self.chi.imag,
                                self.absorption, self.dispersion, self.slope])
        return Series(task="susceptibility",
                      columns=("delta", "re_chi", "im_chi", "absorption", "dispersion", "slope"),
                      data=data, metadata=dict(metadata or {}))


def probe_denominator(params: ProbeParams, delta):
    """
        real and imaginary parts of D = d + i gamma/2 + i K~(-i d) and the band-edge mask;
        the one code path behind chi and the steady-state amplitude
    """
    d = np.asarray(delta, dtype=float)
    kernel = kernel_laplace_on_axis(params.reservoir, d)
    divergent = is_divergent(kernel)
    re_k = np.where(divergent, 0.0, np.real(kernel))
    im_k = np.where(divergent, 0.0, np.imag(kernel))
    return d - im_k, 0.5 * params.gamma + re_k, divergent


def steady_amplitude(params: ProbeParams, omega_rabi, delta):
    """
        Omega / D, zero at band edges
    """
    re_d, im_d, divergent = probe_denominator(params, delta)
    norm = re_d ** 2 + im_d ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        value = omega_rabi * (re_d - 1j * im_d) / norm
    value = np.where(divergent, 0j, value)
    return value if value.ndim else complex(value)


def chi_value(params: ProbeParams, delta):
    """
        closed-form chi at arbitrary detunings, zero at band edges
    """
    re_d, im_d, divergent = probe_denominator(params, delta)
    norm = re_d ** 2 + im_d ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        value = -params.chi0 * (re_d + 1j * im_d) / norm
    value = np.where(divergent, 0j, value)
    return value if value.ndim else complex(value)


def analytic_slope(params: ProbeParams, grid):
    """
        d Re chi / d delta from the closed-form kernel derivative;
        +inf at band edges
    """
    d = np.asarray(grid, dtype=float)
    re_d, im_d, divergent = probe_denominator(params, d)
    dkernel = kernel_laplace_on_axis_derivative(params.reservoir, d)
    dk = np.where(divergent, 0j, dkernel)
    conj_d = re_d - 1j * im_d
    # D' = 1 + i dK/d delta ; d chi / d delta = chi0 conj(D') / conj(D)^2
    with np.errstate(divide="ignore", invalid="ignore"):
        dchi = params.chi0 * np.conj(1 + 1j * dk) / conj_d ** 2
    slope = np.where(divergent, np.inf, np.real(dchi))
    return slope if slope.ndim else float(slope)


def group_index(slope, carrier_omega):
    """
        c / v_g = 1 + (omega / 2) d Re chi / d delta, with omega in units of beta
    """
    return 1.0 + 0.5 * carrier_omega * np.asarray(slope)


def chi_eval(params: ProbeParams, grid) -> ProbeResponse:
    if not params.gamma > 0:
        raise ValueError("gamma must be > 0 for the steady-state susceptibility")
    if np.size(grid) == 0:
        raise ValueError("empty grid")
    grid, snapped = snap_band_edges(grid, params.reservoir.edges)
    if snapped:
        logger.debug("snapped band edges {} onto the probe grid", list(snapped))
    chi = np.atleast_1d(chi_value(params, grid))
    dispersion = chi.real.copy()
    response = ProbeResponse(grid=grid, chi=chi, absorption=-chi.imag, dispersion=dispersion,
                             slope=central_difference(dispersion, grid), snapped_edges=snapped)
    return replace(response, transparency_points=tuple(transparency_windows(response, params)))


def transparency_windows(response: ProbeResponse, params: ProbeParams) -> List[float]:
    """
        band edges where the medium is verified transparent
    """
    edges = params.reservoir.edges
    magnitude = np.abs(response.chi)
    peak = float(magnitude.max()) if magnitude.size else 0.0
    scale = peak if peak > 0 else 2.0 * params.chi0 / params.gamma
    verified = verify_edge_zeros(lambda d: chi_value(params, d), edges, scale,
                                 tol=TRANSPARENCY_TOLERANCE, label="transparency")
    verify_no_extra_zeros(response.grid, response.chi, edges, scale, label="transparency")
    return verified


def group_slope_report(response: ProbeResponse) -> List[Tuple[float, float]]:
    """
        (transparency point, d Re chi / d delta) for every transparency point on the grid;
        large positive slopes mean slow light
    """
    report = []
    for point in response.transparency_points:
        hits = np.flatnonzero(response.grid == point)
        if hits.size:
            report.append((point, float(response.slope[hits[0]])))
    return report
