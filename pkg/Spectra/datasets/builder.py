"""
    series build
"""
import numpy as np

from Spectra.datasets.series import Series
from Spectra.models.reservoir import density_of_modes, kernel_laplace_on_axis


def density_series(model, grid, metadata=None) -> Series:
    """
        rho and the boundary kernel K~(-i d) on a grid; band edges give inf
    """
    grid = np.asarray(grid, dtype=float)
    kernel = kernel_laplace_on_axis(model, grid)
    data = np.column_stack([grid, density_of_modes(model, grid), kernel.real, kernel.imag])
    return Series(task="density", columns=("delta", "rho", "re_kernel", "im_kernel"), data=data,
                  metadata=dict(metadata or {}))


def build_series(series_config, result=None):
    """
        build series
            series_config: dict(type=<task>, metadata=..., ...)
            result: computed object of that task
    """
    series_config = dict(series_config)
    series_type = series_config.pop("type")
    metadata = series_config.pop("metadata", {})
    if series_type in ("emission", "susceptibility", "dynamics", "crosscheck"):
        series = result.to_series(metadata)
    elif series_type == "density":
        series = density_series(metadata=metadata, **series_config)
    else:
        raise NotImplementedError("no series for task '{}'".format(series_type))
    return series
