"""
    reservoir kernels and closed-form spectra
"""
from .reservoir import ReservoirModel  # noqa: F401
from .emission import EmissionParams, EmissionSpectrum, spectrum_eval  # noqa: F401
from .susceptibility import ProbeParams, ProbeResponse, chi_eval  # noqa: F401
