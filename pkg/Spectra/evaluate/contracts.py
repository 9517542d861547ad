"""
    numerical checks that a response vanishes at the band edges
"""
from typing import Callable, List, Sequence

import numpy as np
from loguru import logger

from Spectra.utils.errors import ContractError

EDGE_OFFSET = 1e-6
EDGE_TOLERANCE = 1e-4


def verify_edge_zeros(response: Callable, edges: Sequence[float], scale: float,
                      tol: float = EDGE_TOLERANCE, offset: float = EDGE_OFFSET,
                      label: str = "dark-line") -> List[float]:
    """
        response(edge +- offset) must stay below tol * scale on both sides of every edge
    """
    verified = []
    for edge in edges:
        probe = np.array([edge - offset, edge + offset])
        magnitude = np.abs(response(probe))
        if np.any(~np.isfinite(magnitude)) or np.any(magnitude > tol * scale):
            raise ContractError(
                "{} contract violated at edge {:+.6f}: |f| = {} > {:.3e}".format(
                    label, edge, magnitude.tolist(), tol * scale))
        logger.debug("{} verified at {:+.6f} (|f| <= {:.3e})", label, edge, float(magnitude.max()))
        verified.append(float(edge))
    return verified


def verify_no_extra_zeros(grid, values, edges: Sequence[float], scale: float,
                          tol: float = 1e-12, label: str = "dark-line") -> None:
    """
        no grid point other than a band edge may carry a vanishing response
    """
    grid = np.asarray(grid, dtype=float)
    magnitude = np.abs(np.asarray(values))
    suspects = (magnitude <= tol * scale) & ~np.isin(grid, np.asarray(edges, dtype=float))
    if np.any(suspects):
        raise ContractError("{} contract violated: unexpected zero at {}".format(
            label, grid[suspects][:5].tolist()))
