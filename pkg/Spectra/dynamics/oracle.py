"""
    time-domain oracle for the frequency-domain formulas

    b2: emission from |2>,   b2' = -gamma/2 b2 - int K(t-s) b2(s) ds,               b2(0) = 1
    c2: weak probe,          c2' = -i Omega + (i d - gamma/2) c2 - int K'(t-s) c2(s) ds, c2(0) = 0
        with K'(tau) = K(tau) exp(i d tau), i.e. every branch edge shifted by -d
"""
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Tuple

import numpy as np
from loguru import logger
from scipy import integrate

from Spectra.datasets.series import Series
from Spectra.dynamics.volterra import SCHEMES, MemoryEquation, integrate_memory
from Spectra.models.emission import EmissionParams, EmissionSpectrum, find_peaks
from Spectra.models.grid import snap_band_edges
from Spectra.models.reservoir import kernel_branches
from Spectra.models.susceptibility import ProbeParams, steady_amplitude
from Spectra.utils.errors import ContractError, SolverError

NORM_SLACK = 1e-6
TAIL_LIMIT = 1e-3
EDGE_ATOL = 1e-9
EXACT_RTOL = 1e-10
SLOW_RELAXATION = "band-edge: slow relaxation"


@dataclass(frozen=True)
class SolverGrid:
    """
        uniform time grid t_k = k t_max / steps
    """
    t_max: float
    steps: int = 20000
    scheme: str = "exponential"

    def __post_init__(self):
        if not (math.isfinite(self.t_max) and self.t_max > 0):
            raise ValueError("t_max must be > 0, got {}".format(self.t_max))
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError("steps must be an integer >= 2, got {}".format(self.steps))
        if self.scheme not in SCHEMES:
            raise ValueError("unknown scheme '{}', expected one of {}".format(self.scheme, SCHEMES))

    @property
    def dt(self):
        return self.t_max / self.steps

    def refined(self, factor: int = 2) -> "SolverGrid":
        return replace(self, steps=self.steps * factor)

    def describe(self):
        return dict(t_max=self.t_max, steps=self.steps, dt=self.dt, scheme=self.scheme)


@dataclass(frozen=True, eq=False)
class AmplitudeTrajectory:
    """
        kind is b2_emission or c2_probe; params_echo holds every parameter of the run
    """
    times: np.ndarray
    values: np.ndarray
    kind: str
    params_echo: dict = field(default_factory=dict)
    notes: Tuple[str, ...] = ()

    @property
    def final(self) -> complex:
        return complex(self.values[-1])

    def tail_mean(self, fraction: float = 0.25) -> complex:
        """
            time average over the last `fraction` of the run
        """
        if not 0 < fraction <= 1:
            raise ValueError("fraction must lie in (0, 1]")
        start = min(int(round((1 - fraction) * (self.times.size - 1))), self.times.size - 2)
        t = self.times[start:]
        return complex(integrate.trapezoid(self.values[start:], t) / (t[-1] - t[0]))

    def is_monotone(self, slack: float = NORM_SLACK) -> bool:
        return bool(np.all(np.diff(np.abs(self.values)) <= slack))

    def to_series(self, metadata: Optional[dict] = None) -> Series:
        data = np.column_stack([self.times, self.values.real, self.values.imag, np.abs(self.values)])
        meta = dict(self.params_echo)
        meta.update(metadata or {})
        if self.notes:
            meta["notes"] = list(self.notes)
        return Series(task="dynamics", columns=("t", "re", "im", "abs"), data=data, metadata=meta)


@dataclass(frozen=True)
class ConvergenceReport:
    dts: Tuple[float, ...]
    finals: Tuple[complex, ...]
    order: float
    extrapolated: complex
    passed: bool
    exact: bool = False
    halving_change: float = 0.0

    def describe(self):
        return dict(dts=list(self.dts), order=self.order, passed=self.passed, exact=self.exact,
                    halving_change=self.halving_change,
                    extrapolated=[self.extrapolated.real, self.extrapolated.imag])


def _echo(params, grid, **extra):
    echo = params.describe()
    echo.update(grid.describe())
    echo.update(extra)
    return echo


def solve_b2(params: EmissionParams, grid: SolverGrid, progress: bool = False) -> AmplitudeTrajectory:
    model = params.reservoir
    branches = kernel_branches(model)
    if params.gamma <= 0 and not branches:
        raise ValueError("solve_b2 needs gamma > 0 or a non-Markovian reservoir")
    if params.gamma == 0:
        logger.warning("gamma = 0: the amplitude need not decay, steady-state contracts do not apply")
    equation = MemoryEquation(rate=complex(-0.5 * params.gamma), source=0j,
                              branches=tuple(branches), initial=1 + 0j)
    times, values = integrate_memory(equation, grid.t_max, grid.steps, grid.scheme, progress)
    peak = float(np.max(np.abs(values)))
    if peak > 1 + NORM_SLACK:
        raise SolverError("|b2| reached {:.8f} > 1".format(peak), dt=grid.dt)
    traj = AmplitudeTrajectory(times=times, values=values, kind="b2_emission",
                               params_echo=_echo(params, grid, amplitude="b2"))
    if not traj.is_monotone():
        if branches:
            logger.debug("|b2| is not monotone: the reservoir returns amplitude")
        else:
            logger.warning("|b2| is not monotone on a kernel-free run")
    return traj


def solve_c2(params: ProbeParams, omega_rabi: float, delta: float, grid: SolverGrid,
             progress: bool = False) -> AmplitudeTrajectory:
    model = params.reservoir
    branches = kernel_branches(model)
    if params.gamma <= 0 and not branches:
        raise ValueError("solve_c2 needs gamma > 0 or a non-Markovian reservoir")
    scales = [params.gamma] + ([model.beta] if branches else [])
    if abs(omega_rabi) > 0.1 * min(scales):
        logger.warning("omega = {} is not small against min(beta, gamma) = {}: perturbative regime left",
                       omega_rabi, min(scales))
    notes = []
    if any(abs(delta - edge) <= EDGE_ATOL for edge in model.edges):
        notes.append(SLOW_RELAXATION)
        logger.warning("delta = {} sits on a band edge: {}", delta, SLOW_RELAXATION)
    equation = MemoryEquation(rate=complex(-0.5 * params.gamma, delta), source=complex(0, -omega_rabi),
                              branches=tuple((w, edge - delta) for w, edge in branches),
                              initial=0j)
    times, values = integrate_memory(equation, grid.t_max, grid.steps, grid.scheme, progress)
    return AmplitudeTrajectory(times=times, values=values, kind="c2_probe",
                               params_echo=_echo(params, grid, amplitude="c2", omega=omega_rabi, delta=delta),
                               notes=tuple(notes))


def steady_state_c2(params: ProbeParams, omega_rabi: float, delta):
    """
        c2(t -> inf) = Omega / (d + i gamma/2 + i K~(-i d)); zero on a band edge
    """
    if not params.gamma > 0:
        raise ValueError("gamma must be > 0 for a steady state")
    if np.any(np.isin(np.asarray(delta, dtype=float), params.reservoir.edges)):
        logger.warning("divergent kernel at a band edge: steady state set to 0 by continuity")
    return steady_amplitude(params, omega_rabi, delta)


def spectrum_from_trajectory(traj: AmplitudeTrajectory, params: EmissionParams, grid,
                             chunk: int = 64) -> EmissionSpectrum:
    """
        S(d) = gamma |int_0^t_max b2(t) exp(i d t) dt|^2 by the trapezoidal rule
    """
    if traj.kind != "b2_emission":
        raise ValueError("spectrum_from_trajectory needs a b2_emission trajectory, got {}".format(traj.kind))
    tail = abs(traj.final)
    if tail >= TAIL_LIMIT:
        raise ContractError("undecayed tail |b2(t_max)| = {:.3e}: increase t_max".format(tail))
    grid, snapped = snap_band_edges(grid, params.reservoir.edges)
    amplitude = np.empty(grid.size, dtype=complex)
    for start in range(0, grid.size, chunk):
        detuning = grid[start:start + chunk]
        phase = np.exp(1j * np.outer(detuning, traj.times))
        amplitude[start:start + chunk] = integrate.trapezoid(phase * traj.values, traj.times, axis=1)
    spectrum = EmissionSpectrum(grid=grid, values=params.gamma * np.abs(amplitude) ** 2, snapped_edges=snapped)
    return replace(spectrum, peaks=tuple(find_peaks(spectrum)))


def convergence_check(solve: Callable[[SolverGrid], AmplitudeTrajectory], grid: SolverGrid,
                      levels: int = 2, min_order: float = 0.9) -> ConvergenceReport:
    """
        rerun `solve` at dt / 2^k, k = 0..levels, and estimate the observed order
        from the final amplitudes of the last three runs
    """
    if levels < 2:
        raise ValueError("convergence_check needs levels >= 2")
    dts, finals = [], []
    for k in range(levels + 1):
        level_grid = grid.refined(2 ** k)
        finals.append(solve(level_grid).final)
        dts.append(level_grid.dt)
    y0, y1, y2 = finals[-3:]
    coarse, fine = abs(y0 - y1), abs(y1 - y2)
    halving_change = fine / abs(y2) if y2 != 0 else fine
    if fine <= EXACT_RTOL * abs(y2):
        report = ConvergenceReport(dts=tuple(dts), finals=tuple(finals), order=math.inf,
                                   extrapolated=y2, passed=True, exact=True, halving_change=halving_change)
    else:
        order = math.log2(coarse / fine) if coarse > 0 else -math.inf
        extrapolated = y2 + (y2 - y1) / (2 ** order - 1) if order > 0 else y2
        report = ConvergenceReport(dts=tuple(dts), finals=tuple(finals), order=order,
                                   extrapolated=complex(extrapolated), passed=order >= min_order,
                                   halving_change=halving_change)
    logger.info("convergence: {}", report.describe())
    return report
