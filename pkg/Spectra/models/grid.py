"""
    detuning grids: validation, band-edge snapping, stencils and peak refinement
"""
from typing import List, Sequence, Tuple

import numpy as np


def validate_grid(grid) -> np.ndarray:
    """
        non-empty, finite, strictly increasing 1-d float array
    """
    arr = np.asarray(grid, dtype=float)
    if arr.ndim != 1:
        raise ValueError("grid must be one-dimensional")
    if arr.size == 0:
        raise ValueError("empty grid")
    if not np.all(np.isfinite(arr)):
        raise ValueError("grid contains non-finite detunings")
    if arr.size > 1 and np.any(np.diff(arr) <= 0):
        raise ValueError("grid must be strictly increasing")
    return arr


def snap_band_edges(grid, edges: Sequence[float]) -> Tuple[np.ndarray, Tuple[float, ...]]:
    """
        move the grid point nearest to each band edge onto the edge when it lies within
        half a local step; returns the new grid and the edges that were snapped
    """
    arr = validate_grid(grid).copy()
    snapped: List[float] = []
    for edge in edges:
        idx = int(np.argmin(np.abs(arr - edge)))
        distance = abs(arr[idx] - edge)
        if distance == 0:
            snapped.append(edge)
            continue
        if arr.size == 1:
            continue
        # spacing on the side of the grid point that faces the edge
        if edge > arr[idx]:
            step = arr[idx + 1] - arr[idx] if idx + 1 < arr.size else arr[idx] - arr[idx - 1]
        else:
            step = arr[idx] - arr[idx - 1] if idx > 0 else arr[idx + 1] - arr[idx]
        if distance <= 0.5 * step:
            arr[idx] = edge
            snapped.append(edge)
    if snapped and arr.size > 1 and np.any(np.diff(arr) <= 0):
        raise ValueError("grid too coarse to resolve both band edges")
    return arr, tuple(snapped)


def central_difference(values, grid) -> np.ndarray:
    """
        second-order central differences, one-sided second order at the ends
    """
    values = np.asarray(values, dtype=float)
    grid = np.asarray(grid, dtype=float)
    if grid.size < 2:
        return np.zeros_like(values)
    edge_order = 2 if grid.size >= 3 else 1
    return np.gradient(values, grid, edge_order=edge_order)


def parabolic_vertex(x, y):
    """
        vertex of the parabola through three points (x0, y0), (x1, y1), (x2, y2)
    """
    d0, d2 = x[0] - x[1], x[2] - x[1]
    s0, s2 = (y[0] - y[1]) / d0, (y[2] - y[1]) / d2
    a = (s0 - s2) / (d0 - d2)
    if a == 0:
        return float(x[1]), float(y[1])
    b = s0 - a * d0
    t = -b / (2 * a)
    return float(x[1] + t), float(y[1] - b * b / (4 * a))


def local_maxima(grid, values) -> List[Tuple[float, float]]:
    """
        interior local maxima, refined by a three-point parabola

        a run of equal samples counts once when both neighbours are lower; a
        two-sample top is fitted through its samples and the one just before it,
        a longer one is reported at its centre
    """
    x = np.asarray(grid, dtype=float)
    y = np.asarray(values, dtype=float)
    if y.size < 3:
        return []
    starts = np.flatnonzero(np.concatenate(([True], y[1:] != y[:-1])))
    ends = np.append(starts[1:] - 1, y.size - 1)
    level = y[starts]
    rising = np.concatenate(([False], level[1:] > level[:-1]))
    falling = np.concatenate((level[:-1] > level[1:], [False]))
    top = rising & falling
    peaks = []
    for i, j in zip(starts[top], ends[top]):
        if i == j:
            peaks.append(parabolic_vertex(x[i - 1:i + 2], y[i - 1:i + 2]))
        elif j == i + 1:
            picks = [i - 1, i, j]
            peaks.append(parabolic_vertex(x[picks], y[picks]))
        else:
            peaks.append((float(0.5 * (x[i] + x[j])), float(y[i])))
    return peaks
