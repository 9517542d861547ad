"""
    error types
    ConfigError maps to exit status 2, ContractError to exit status 3
"""


class SpectraError(Exception):
    """
        base error
    """
    exit_status = 1
    kind = "error"


class ConfigError(SpectraError, ValueError):
    """
        invalid or incomplete scenario configuration
    """
    exit_status = 2
    kind = "config"


class ContractError(SpectraError, RuntimeError):
    """
        a numerical contract (dark line, transparency, tail decay, ...) does not hold
    """
    exit_status = 3
    kind = "contract"


class SolverError(ContractError):
    """
        the time-domain solver did not produce a trustworthy trajectory
    """

    def __init__(self, msg, dt=None):
        if dt is not None:
            msg = "{} (try dt <= {:.3e})".format(msg, dt / 2)
        super().__init__(msg)
        self.dt = dt
