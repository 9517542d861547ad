"""
    time-domain solver for the memory-kernel amplitude equations
"""
from .oracle import AmplitudeTrajectory, SolverGrid, solve_b2, solve_c2  # noqa: F401
