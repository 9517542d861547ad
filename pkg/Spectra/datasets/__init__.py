"""
    init
"""
from .series import Series  # noqa: F401
from .writers import write_series  # noqa: F401
from .builder import build_series  # noqa: F401
