import json
import os

import numpy as np
import pytest

from Spectra.datasets.builder import build_series, density_series
from Spectra.datasets.series import Series
from Spectra.datasets.writers import series_to_csv, series_to_json, write_series
from Spectra.models.reservoir import ReservoirModel
from Spectra.utils.utils import atomic_write_text


def small_series(**kwargs):
    data = np.array([[-1.0, 0.25], [0.0, 4.0], [1.0, 1.0 / 3.0]])
    return Series(task="emission", columns=("delta", "S"), data=data, **kwargs)


def test_csv_layout():
    text = series_to_csv(small_series())
    lines = text.split("\n")
    assert lines[0] == "delta,S"
    assert lines[1] == "-1.0000000000000000e+00,2.5000000000000000e-01"
    assert lines[3].split(",")[1] == "3.3333333333333331e-01"
    assert float(lines[3].split(",")[1]) == 1.0 / 3.0
    assert "\r" not in text
    assert text.endswith("\n")
    assert not any(line.startswith("#") for line in lines)


def test_csv_trailer():
    text = series_to_csv(small_series(metadata=dict(max_rel_dev=0.0125, steps=20000), trailer=True))
    last = text.rstrip("\n").split("\n")[-1]
    assert last.startswith("# ")
    assert json.loads(last[2:]) == dict(max_rel_dev=0.0125, steps=20000)


def test_json_layout():
    payload = json.loads(series_to_json(small_series(metadata=dict(gamma=np.float64(1.0), n=np.int64(3)))))
    assert payload["task"] == "emission"
    assert payload["columns"] == ["delta", "S"]
    assert payload["rows"][1] == [0.0, 4.0]
    assert payload["metadata"] == dict(gamma=1.0, n=3)


def test_non_finite_values_become_null():
    series = density_series(ReservoirModel.double(-1.0, 1.0), np.array([-2.0, -1.0, 0.0]))
    payload = json.loads(series_to_json(series))
    assert payload["columns"] == ["delta", "rho", "re_kernel", "im_kernel"]
    assert payload["rows"][1][1:] == [None, None, 0.0]
    assert payload["rows"][2][1] == 0.0
    assert "inf" in series_to_csv(series)


def test_build_series_dispatch():
    series = build_series(dict(type="density", model=ReservoirModel.single(0.0), grid=[-1.0, 1.0],
                               metadata=dict(task="density")))
    assert series.task == "density"
    assert series.metadata == dict(task="density")
    with pytest.raises(NotImplementedError):
        build_series(dict(type="histogram"))


def test_series_validation():
    with pytest.raises(ValueError):
        Series(task="emission", columns=("delta", "S"), data=np.zeros((3, 3)))
    assert small_series().column("S")[1] == 4.0
    assert len(small_series()) == 3


def test_write_series(tmp_path):
    path = str(tmp_path / "out" / "fig.json")
    assert write_series(small_series(), path, "json") == path
    with open(path) as f:
        assert json.load(f)["rows"][0] == [-1.0, 0.25]
    assert [name for name in os.listdir(tmp_path / "out")] == ["fig.json"]
    with pytest.raises(ValueError, match="unknown output format"):
        write_series(small_series(), path, "xlsx")


def test_output_is_deterministic():
    first = series_to_csv(small_series(metadata=dict(b=1, a=2), trailer=True))
    second = series_to_csv(small_series(metadata=dict(a=2, b=1), trailer=True))
    assert first == second


def test_atomic_write_keeps_old_file_on_failure(tmp_path, monkeypatch):
    path = str(tmp_path / "series.csv")
    atomic_write_text(path, "old\n")

    def broken(src, dst):
        raise OSError("disk full")

    monkeypatch.setattr(os, "replace", broken)
    with pytest.raises(OSError):
        atomic_write_text(path, "new\n")
    with open(path) as f:
        assert f.read() == "old\n"
    assert os.listdir(tmp_path) == ["series.csv"]
