"""
    init
"""
from .errors import ConfigError, ContractError, SolverError, SpectraError  # noqa: F401
from .pretty import pretty_print, summary_table  # noqa: F401
from .utils import atomic_write_text, path_finder, threads_from_env  # noqa: F401
