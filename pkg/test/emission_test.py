import numpy as np
import pytest
from scipy import integrate

from conftest import FIG2A_GAPS, FIG2B_GAPS, double, mirror_grid
from Spectra.models.emission import EmissionParams, emission_value, spectrum_eval
from Spectra.models.reservoir import ReservoirModel
from Spectra.utils.errors import ContractError


def test_markovian_limit(default_grid):
    spectrum = spectrum_eval(EmissionParams(gamma=1.0), default_grid)
    lorentzian = 1.0 / (0.25 + default_grid ** 2)
    np.testing.assert_allclose(spectrum.values, lorentzian, rtol=1e-14)
    assert spectrum.dark_lines == ()
    assert len(spectrum.peaks) == 1
    assert spectrum.peaks[0][0] == pytest.approx(0.0, abs=1e-12)
    assert spectrum.peaks[0][1] == pytest.approx(4.0)


def test_beta_zero_is_markovian():
    grid = np.linspace(-5.0, 5.0, 2000)
    params = EmissionParams(gamma=0.5, reservoir=ReservoirModel.double(-1.0, 1.0, beta=0.0))
    np.testing.assert_allclose(emission_value(params, grid), 0.5 / (0.0625 + grid ** 2), rtol=1e-14)


@pytest.mark.parametrize("gap", FIG2A_GAPS + FIG2B_GAPS)
def test_dark_lines(gap, default_grid):
    params = EmissionParams(gamma=1.0, reservoir=double(gap))
    spectrum = spectrum_eval(params, default_grid)
    assert spectrum.dark_lines == gap
    for edge in gap:
        assert spectrum.values[spectrum.grid == edge].tolist() == [0.0]
    others = ~np.isin(spectrum.grid, gap)
    assert np.all(spectrum.values[others] > 0)


def test_dark_line_off_grid_is_snapped():
    grid = np.linspace(-5.0, 5.0, 1001)
    params = EmissionParams(gamma=1.0, reservoir=double((-1.003, 1.0)))
    spectrum = spectrum_eval(params, grid)
    assert -1.003 in spectrum.snapped_edges
    assert spectrum.dark_lines == (-1.003, 1.0)


def test_symmetric_gap_spectrum():
    grid = mirror_grid()
    spectrum = spectrum_eval(EmissionParams(gamma=1.0, reservoir=double((-1.0, 1.0))), grid)
    assert np.array_equal(spectrum.values, spectrum.values[::-1])
    assert emission_value(EmissionParams(gamma=1.0, reservoir=double((-1.0, 1.0))), 0.0) == 4.0
    positions = [x for x, _ in spectrum.peaks]
    heights = [h for _, h in spectrum.peaks]
    assert positions[0] == pytest.approx(-1.42, abs=0.01)
    assert positions[1] == pytest.approx(0.0, abs=1e-9)
    assert positions[2] == pytest.approx(1.42, abs=0.01)
    assert heights[0] == pytest.approx(0.354, abs=0.002)
    assert heights[1] == pytest.approx(4.0)


@pytest.mark.parametrize("gap", FIG2B_GAPS)
def test_symmetric_gaps_keep_central_peak(gap):
    params = EmissionParams(gamma=1.0, reservoir=double(gap))
    spectrum = spectrum_eval(params, mirror_grid())
    assert np.array_equal(spectrum.values, spectrum.values[::-1])
    assert max(h for _, h in spectrum.peaks) == pytest.approx(4.0)
    assert len(spectrum.peaks) == 3
    assert spectrum.dark_lines == gap


def test_one_sided_gap_suppresses_far_peak(default_grid):
    spectrum = spectrum_eval(EmissionParams(gamma=1.0, reservoir=double((-3.0, 0.0))), default_grid)
    tallest = max(h for _, h in spectrum.peaks)
    left = [h for x, h in spectrum.peaks if x < -3.0]
    assert left
    assert max(left) < 0.05 * tallest


def test_approach_to_single_band():
    grid = np.linspace(-1.0, 3.0, 801)
    single = spectrum_eval(EmissionParams(gamma=1.0, reservoir=ReservoirModel.single(0.0)), grid).values
    distances = []
    for lower in (-1.0, -2.0, -3.0, -6.0, -12.0):
        values = spectrum_eval(EmissionParams(gamma=1.0, reservoir=double((lower, 0.0))), grid).values
        distances.append(np.sqrt(integrate.trapezoid((values - single) ** 2, grid)))
    assert all(b < a for a, b in zip(distances, distances[1:]))


@pytest.mark.parametrize("edge", [0.0, 1.0, -1.0])
def test_single_band_dark_line(edge, default_grid):
    spectrum = spectrum_eval(EmissionParams(gamma=1.0, reservoir=ReservoirModel.single(edge)), default_grid)
    assert spectrum.dark_lines == (edge,)


def test_series_layout(default_grid):
    series = spectrum_eval(EmissionParams(), default_grid).to_series({"task": "emission"})
    assert series.columns == ("delta", "S")
    assert len(series) == default_grid.size


def test_errors(default_grid):
    with pytest.raises(ValueError, match="gamma must be > 0"):
        spectrum_eval(EmissionParams(gamma=0.0), default_grid)
    with pytest.raises(ValueError, match="empty grid"):
        spectrum_eval(EmissionParams(), [])
    with pytest.raises(ValueError):
        EmissionParams(gamma=-1.0)


def test_contract_violation_is_reported(default_grid, monkeypatch):
    import Spectra.models.emission as emission

    params = EmissionParams(gamma=1.0, reservoir=double((-1.0, 1.0)))
    monkeypatch.setattr(emission, "emission_value", lambda p, d: np.ones_like(np.asarray(d, dtype=float)))
    with pytest.raises(ContractError, match="dark-line"):
        emission.spectrum_eval(params, default_grid)
