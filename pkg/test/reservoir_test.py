import math

import numpy as np
import pytest

from conftest import double
from Spectra.models.reservoir import (ReservoirModel, density_of_modes, is_divergent, kernel_branches,
                                      kernel_laplace, kernel_laplace_derivative, kernel_laplace_on_axis,
                                      kernel_laplace_on_axis_derivative, kernel_time, laplace_quadrature)
from Spectra.utils.errors import ContractError

SCAN_MODELS = [
    ReservoirModel.double(-1.0, 0.0),
    ReservoirModel.double(-2.0, 2.0),
    ReservoirModel.double(-3.0, 0.5),
    ReservoirModel.single(0.0),
    ReservoirModel.single(-1.0),
]


def test_constructors_and_edges():
    assert ReservoirModel.double(-1, 1).edges == (-1.0, 1.0)
    assert ReservoirModel.single(2).edges == (2.0,)
    assert ReservoirModel.none().edges == ()
    assert ReservoirModel.single(2).delta_g == 2.0
    assert ReservoirModel.double(-1, 1).name == "DoubleBandIsotropic"


def test_invalid_models():
    with pytest.raises(ValueError, match="gap width must be positive"):
        ReservoirModel.double(2.0, 1.0)
    with pytest.raises(ValueError, match="beta"):
        ReservoirModel.single(0.0, beta=-1.0)
    with pytest.raises(ValueError):
        ReservoirModel(kind="anisotropic")


def test_density_of_modes():
    model = ReservoirModel.double(-1.0, 1.0)
    assert density_of_modes(model, 0.0) == 0.0
    assert density_of_modes(model, 2.0) == pytest.approx(1 / (2 * math.pi), rel=1e-15)
    assert density_of_modes(model, -2.0) == pytest.approx(1 / (2 * math.pi), rel=1e-15)
    assert math.isinf(density_of_modes(model, 1.0))
    single = ReservoirModel.single(0.0)
    assert density_of_modes(single, 1e-8) == pytest.approx(1e4 / (2 * math.pi), rel=1e-12)
    assert density_of_modes(single, -0.5) == 0.0
    rho = density_of_modes(single, np.array([1e-6, 1e-4]))
    assert rho[0] / rho[1] == pytest.approx(10.0)


def test_density_needs_reservoir():
    with pytest.raises(ValueError, match="no non-Markovian reservoir configured"):
        density_of_modes(ReservoirModel.none(), 0.0)


def test_kernel_laplace_values():
    assert abs(kernel_laplace(double((-1.0, 1.0)), 0.0)) < 1e-14
    assert kernel_laplace(ReservoirModel.single(0.0), -1j) == pytest.approx(1.0 + 0j, abs=1e-15)


def test_kernel_laplace_branch_point():
    with pytest.raises(ContractError, match="band-edge divergence"):
        kernel_laplace(double((-1.0, 1.0)), 1j)
    # approaching the branch point the kernel blows up
    assert abs(kernel_laplace(double((-1.0, 1.0)), 1e-12 + 1j)) > 1e5


def test_kernel_laplace_left_half_plane():
    with pytest.raises(ValueError):
        kernel_laplace(double((-1.0, 1.0)), -0.5 + 0j)


def test_on_axis_values():
    value = kernel_laplace_on_axis(double((-1.0, 1.0)), 2.0)
    assert value == pytest.approx(0.5 + 0.5j / math.sqrt(3.0), abs=1e-15)
    edge = kernel_laplace_on_axis(double((-1.0, 1.0)), np.array([-1.0, 0.0, 1.0]))
    assert list(is_divergent(edge)) == [True, False, True]
    assert edge[1] == 0


@pytest.mark.parametrize("model, delta", [
    (ReservoirModel.double(-1.0, 0.0), -8.881784197001252e-16),
    (ReservoirModel.double(-1.0, 0.0), -1.0 + 1e-15),
    (ReservoirModel.single(0.0), -1e-15),
    (ReservoirModel.double(-2.0, 2.0), 2.0 - 4e-16),
])
def test_on_axis_is_pure_shift_next_to_an_edge(model, delta):
    value = kernel_laplace_on_axis(model, delta)
    assert abs(value.imag) > 1e6
    assert value.real == 0.0
    assert kernel_laplace_on_axis_derivative(model, delta).real == 0.0


def test_kernel_branches():
    assert kernel_branches(ReservoirModel.none()) == ()
    assert kernel_branches(ReservoirModel.double(-1.0, 1.0, beta=0.0)) == ()
    [(weight, edge)] = kernel_branches(ReservoirModel.single(0.5, beta=4.0))
    assert edge == 0.5
    assert weight == pytest.approx(8.0 * (1 - 1j) / math.sqrt(2.0), abs=1e-14)


def test_branch_weights_carry_quarter_phases():
    for model in SCAN_MODELS:
        for (weight, edge), (magnitude, phase, phased_edge) in zip(model.branches(), model.phased_branches()):
            assert edge == phased_edge
            assert weight == pytest.approx(magnitude * complex(math.cos(phase * math.pi / 4),
                                                                math.sin(phase * math.pi / 4)), abs=1e-15)


def test_on_axis_matches_limit_from_right_half_plane():
    model = double((-2.0, 0.5))
    for delta in (-3.0, -1.0, 0.2, 2.0):
        limit = kernel_laplace(model, 1e-12 - 1j * delta)
        assert kernel_laplace_on_axis(model, delta) == pytest.approx(limit, rel=1e-9)


@pytest.mark.parametrize("model", SCAN_MODELS)
def test_branch_physics(model):
    delta = np.linspace(-6.0, 6.0, 10001)
    kernel = kernel_laplace_on_axis(model, delta)
    finite = ~is_divergent(kernel)
    assert np.all(kernel.real[finite] >= -1e-12)
    if model.kind == "double":
        inside = (delta > model.delta_g1) & (delta < model.delta_g2)
    else:
        inside = delta < model.delta_g
    assert np.all(kernel.real[inside & finite] == 0.0)
    assert np.any(kernel.real[~inside & finite] > 0)


def test_none_model_annihilates():
    model = ReservoirModel.none()
    assert kernel_laplace(model, 1 + 2j) == 0
    assert kernel_laplace_on_axis(model, 0.3) == 0
    assert kernel_time(model, 2.0) == 0


def test_beta_scaling():
    s = np.array([0.1 + 0.3j, 1.0, 2.0 - 4.0j])
    base = kernel_laplace(double((-1.0, 1.0)), s)
    scaled = kernel_laplace(double((-1.0, 1.0), beta=2.25), s)
    np.testing.assert_allclose(scaled, 2.25 ** 1.5 * base, rtol=1e-14)
    np.testing.assert_allclose(kernel_laplace(double((-1.0, 1.0), beta=4.0), s), 8.0 * base, rtol=1e-14)


def test_kernel_time():
    t = np.array([0.1, 1.0, 7.5])
    single = kernel_time(ReservoirModel.single(0.7), t)
    np.testing.assert_allclose(np.abs(single), 1 / np.sqrt(np.pi * t), rtol=1e-14)
    with pytest.raises(ValueError):
        kernel_time(ReservoirModel.single(0.7), 0.0)


@pytest.mark.parametrize("re_s", [0.1, 0.5, 1.0, 2.5, 5.0])
@pytest.mark.parametrize("im_s", [-2.0, -0.5, 0.5, 2.0])
def test_laplace_pair(re_s, im_s):
    model = double((-1.0, 1.0))
    s = complex(re_s, im_s)
    assert laplace_quadrature(model, s) == pytest.approx(kernel_laplace(model, s), rel=1e-3)


def test_laplace_pair_truncated():
    model = double((-1.0, 1.0))
    assert laplace_quadrature(model, 1.0, t_max=200.0) == pytest.approx(kernel_laplace(model, 1.0), rel=1e-3)


def test_laplace_derivative():
    model = double((-1.5, 0.5), beta=1.3)
    s, h = 1.0 + 0.5j, 1e-5
    numeric = (kernel_laplace(model, s + h) - kernel_laplace(model, s - h)) / (2 * h)
    assert kernel_laplace_derivative(model, s) == pytest.approx(numeric, rel=1e-6)


def test_on_axis_derivative():
    model = double((-1.0, 1.0))
    for delta in (0.3, 2.0, -1.7):
        h = 1e-6
        numeric = (kernel_laplace_on_axis(model, delta + h) - kernel_laplace_on_axis(model, delta - h)) / (2 * h)
        assert kernel_laplace_on_axis_derivative(model, delta) == pytest.approx(numeric, rel=1e-6)
    assert is_divergent(kernel_laplace_on_axis_derivative(model, 1.0))
