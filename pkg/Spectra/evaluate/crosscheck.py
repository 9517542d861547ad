"""
    frequency-domain vs time-domain agreement of the emission spectrum
"""
import numpy as np
from loguru import logger

from Spectra.datasets.series import Series
from Spectra.models.emission import EmissionSpectrum

CROSSCHECK_TOLERANCE = 0.02


def max_relative_deviation(reference, candidate):
    """
        max_i |candidate - reference| / max_i reference
    """
    reference = np.asarray(reference, dtype=float)
    candidate = np.asarray(candidate, dtype=float)
    if reference.shape != candidate.shape:
        raise ValueError("spectra sampled on different grids: {} vs {}".format(reference.shape, candidate.shape))
    scale = float(np.max(np.abs(reference)))
    if scale == 0:
        raise ValueError("reference spectrum vanishes everywhere")
    return float(np.max(np.abs(candidate - reference)) / scale)


class CrossCheckEval(object):
    def __init__(self, tolerance=CROSSCHECK_TOLERANCE, window=None):
        """
            window: optional (low, high) detuning range the deviation is measured on
        """
        self.tolerance = tolerance
        self.window = window
        self.ground_truth = None
        self.prediction = None
        self.result = {}

    def load_gt(self, spectrum: EmissionSpectrum):
        """
            closed-form spectrum
        """
        self.ground_truth = spectrum

    def load_pred(self, spectrum: EmissionSpectrum):
        """
            spectrum rebuilt from a trajectory
        """
        self.prediction = spectrum

    def _mask(self):
        grid = self.ground_truth.grid
        if self.window is None:
            return np.ones(grid.shape, dtype=bool)
        low, high = self.window
        return (grid >= low) & (grid <= high)

    def evaluate(self):
        """
            deviation over the window; passed when it stays within tolerance
        """
        assert self.ground_truth is not None and self.prediction is not None, "load_gt and load_pred first"
        if not np.array_equal(self.ground_truth.grid, self.prediction.grid):
            raise ValueError("spectra sampled on different grids")
        mask = self._mask()
        deviation = max_relative_deviation(self.ground_truth.values[mask], self.prediction.values[mask])
        self.result = dict(max_rel_dev=deviation, tolerance=self.tolerance,
                           passed=deviation <= self.tolerance, points=int(mask.sum()))
        logger.info("crosscheck: max relative deviation {:.3e} (tolerance {})", deviation, self.tolerance)
        return self.result

    def to_series(self, metadata=None) -> Series:
        data = np.column_stack([self.ground_truth.grid, self.ground_truth.values, self.prediction.values])
        meta = dict(metadata or {})
        meta["max_rel_dev"] = self.result.get("max_rel_dev")
        return Series(task="crosscheck", columns=("delta", "S_freq", "S_time"), data=data,
                      metadata=meta, trailer=True)
