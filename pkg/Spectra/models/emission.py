"""
    long-time spontaneous emission spectrum into the Markovian channel

        S(d) = gamma / |-i d + gamma/2 + K~(-i d)|^2

    with the proportionality constant fixed to 1 (arbitrary units)
"""
import math
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from Spectra.datasets.series import Series
from Spectra.evaluate.contracts import verify_edge_zeros, verify_no_extra_zeros
from Spectra.models.grid import local_maxima, snap_band_edges
from Spectra.models.reservoir import ReservoirModel, is_divergent, kernel_laplace_on_axis


@dataclass(frozen=True)
class EmissionParams:
    """
        gamma:     Markovian decay rate in units of beta
        reservoir: non-Markovian reservoir on the other transition
    """
    gamma: float = 1.0
    reservoir: ReservoirModel = field(default_factory=ReservoirModel.none)

    def __post_init__(self):
        # gamma == 0 is kept for the time-domain solver; spectra demand gamma > 0
        if not (math.isfinite(self.gamma) and self.gamma >= 0):
            raise ValueError("gamma must be finite and >= 0, got {}".format(self.gamma))

    def describe(self):
        return dict(gamma=self.gamma, **self.reservoir.describe())


@dataclass(frozen=True, eq=False)
class EmissionSpectrum:
    grid: np.ndarray
    values: np.ndarray
    dark_lines: Tuple[float, ...] = ()
    peaks: Tuple[Tuple[float, float], ...] = ()
    snapped_edges: Tuple[float, ...] = ()

    def to_series(self, metadata: Optional[dict] = None) -> Series:
        return Series(task="emission", columns=("delta", "S"),
                      data=np.column_stack([self.grid, self.values]),
                      metadata=dict(metadata or {}))


def emission_value(params: EmissionParams, delta):
    """
        S at arbitrary detunings; exact band edges give 0 by continuity
    """
    d = np.asarray(delta, dtype=float)
    kernel = kernel_laplace_on_axis(params.reservoir, d)
    divergent = is_divergent(kernel)
    re_k = np.where(divergent, 0.0, np.real(kernel))
    im_k = np.where(divergent, 0.0, np.imag(kernel))
    denom = (0.5 * params.gamma + re_k) ** 2 + (im_k - d) ** 2
    with np.errstate(divide="ignore"):
        value = np.where(divergent, 0.0, params.gamma / denom)
    return value if value.ndim else float(value)


def spectrum_eval(params: EmissionParams, grid) -> EmissionSpectrum:
    """
        evaluate S on a strictly increasing grid; band edges within half a step are
        snapped onto the grid so the exact zeros appear in the output
    """
    if not params.gamma > 0:
        raise ValueError("gamma must be > 0 for the emission spectrum")
    if np.size(grid) == 0:
        raise ValueError("empty grid")
    grid, snapped = snap_band_edges(grid, params.reservoir.edges)
    if snapped:
        logger.debug("snapped band edges {} onto the detuning grid", list(snapped))
    spectrum = EmissionSpectrum(grid=grid, values=emission_value(params, grid), snapped_edges=snapped)
    return replace(spectrum,
                   dark_lines=tuple(find_dark_lines(spectrum, params)),
                   peaks=tuple(find_peaks(spectrum)))


def _scale(spectrum, params):
    peak = float(np.max(spectrum.values)) if spectrum.values.size else 0.0
    # S never exceeds 4/gamma, which stands in when the grid misses every feature
    return peak if peak > 0 else 4.0 / params.gamma


def find_dark_lines(spectrum: EmissionSpectrum, params: EmissionParams) -> List[float]:
    """
        band edges of the model, each verified to be an emission zero
    """
    edges = params.reservoir.edges
    scale = _scale(spectrum, params)
    verified = verify_edge_zeros(lambda d: emission_value(params, d), edges, scale, label="dark-line")
    verify_no_extra_zeros(spectrum.grid, spectrum.values, edges, scale, label="dark-line")
    return verified


def find_peaks(spectrum: EmissionSpectrum) -> List[Tuple[float, float]]:
    return local_maxima(spectrum.grid, spectrum.values)
