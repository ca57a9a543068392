import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xlirs.channel import (
    NoiseModel, PhysicalParams, amplitude_spread, anticipated_snr, bs_irs_channel,
    cophased_signal_power, irs_ue_channel, received_power,
)
from xlirs.exceptions import DimensionMismatchError, InvalidConfigError
from xlirs.geometry import SystemConfig, UePosition, build_system_geometry, irs_ue_distances
from xlirs.numerics import rng_stream

from conftest import random_complex

SIGMA2 = 10 ** (-12.4)


def test_params_defaults():
    p = PhysicalParams()
    assert p.tx_power == pytest.approx(10.0)
    assert p.noise_power == pytest.approx(SIGMA2)
    assert p.ue_aperture == pytest.approx(0.01 ** 2 / (4 * np.pi))
    with pytest.raises(InvalidConfigError):
        PhysicalParams(bs_gain=0.0)


def test_scalar_bs_irs_channel(params):
    geo = build_system_geometry(SystemConfig(M=1, N=1, bs_irs_distance=5))
    H = bs_irs_channel(geo, params)
    assert H.shape == (1, 1)
    assert abs(H[0, 0]) == pytest.approx(np.sqrt(2.5e-5 / (4 * np.pi * 25)), rel=1e-12)
    assert abs(H[0, 0]) == pytest.approx(2.8209e-4, rel=1e-4)
    # l / lambda = 500 is an integer number of wavelengths.
    assert abs(np.angle(H[0, 0])) < 1e-9


def test_inverse_square_law(params):
    near = bs_irs_channel(build_system_geometry(SystemConfig(M=1, N=1, bs_irs_distance=5)), params)
    far = bs_irs_channel(build_system_geometry(SystemConfig(M=1, N=1, bs_irs_distance=10)), params)
    assert abs(far[0, 0]) ** 2 == pytest.approx(abs(near[0, 0]) ** 2 / 4, rel=1e-12)


def test_amplitude_follows_aperture_formula(default_geo, default_H, params):
    from xlirs.geometry import bs_irs_distances, effective_apertures
    l = bs_irs_distances(default_geo)
    expected = np.sqrt(params.bs_gain * effective_apertures(default_geo) / (4 * np.pi * l ** 2))
    np.testing.assert_allclose(np.abs(default_H), expected, rtol=1e-12)


def test_captured_power_decreases_with_distance(params):
    totals = []
    for d in np.linspace(5, 50, 10):
        H = bs_irs_channel(build_system_geometry(SystemConfig(bs_irs_distance=d)), params)
        totals.append(np.sum(np.abs(H) ** 2))
    assert np.all(np.diff(totals) < 0)


def test_scalar_irs_ue_channel(params):
    geo = build_system_geometry(SystemConfig(M=1, N=1))
    h = irs_ue_channel(geo, UePosition.polar(geo, 100, 0.0), params)
    a_ue = 0.01 ** 2 / (4 * np.pi)
    assert a_ue == pytest.approx(7.9577e-6, rel=1e-4)
    assert abs(h[0]) == pytest.approx(np.sqrt(a_ue / (4 * np.pi * 1e4)), rel=1e-12)
    assert abs(h[0]) == pytest.approx(7.9577e-6, rel=1e-4)


def test_broadside_channel_symmetry(default_geo, params):
    h = irs_ue_channel(default_geo, UePosition.polar(default_geo, 100, 0.0), params)
    np.testing.assert_allclose(h, h[::-1], rtol=1e-12)


@pytest.mark.parametrize("u", [0.0, 0.5])
def test_equal_amplitude_approximation(default_geo, params, u):
    ue = UePosition.polar(default_geo, 100, u)
    h = irs_ue_channel(default_geo, ue, params)
    assert amplitude_spread(h) < 1e-2
    d = irs_ue_distances(default_geo, ue)
    amp = np.sqrt(params.irs_gain * params.ue_aperture / (4 * np.pi))
    assert amp / d.max() - 1e-18 <= np.abs(h).min() and np.abs(h).max() <= amp / d.min() + 1e-18


def test_received_power_zero_beam(rng):
    H = random_complex(rng, 6, 3)
    h = random_complex(rng, 6)
    assert received_power(h, rng.uniform(0, 6, 6), H, np.zeros(3), SIGMA2) == SIGMA2


def test_received_power_single_element_phase_free(rng):
    H, h, w = random_complex(rng, 1, 3), random_complex(rng, 1), random_complex(rng, 3)
    expected = abs(h[0]) ** 2 * abs((H @ w)[0]) ** 2 + SIGMA2
    for phi in (0.0, 1.0, -2.5):
        assert received_power(h, [phi], H, w, SIGMA2) == pytest.approx(expected, rel=1e-12)


def test_received_power_cophased(rng):
    H, h, w = random_complex(rng, 10, 4), random_complex(rng, 10), random_complex(rng, 4)
    hw = H @ w
    phases = -np.angle(h) - np.angle(hw)
    bound = np.sum(np.abs(h) * np.abs(hw)) ** 2
    assert received_power(h, phases, H, w, SIGMA2) == pytest.approx(bound + SIGMA2, rel=1e-12)
    assert cophased_signal_power(h, H, w) == pytest.approx(bound, rel=1e-12)


def test_received_power_matches_v_form(default_geo, default_H, params, rng):
    # |v^T H w|^2 with v_n = |h_n| exp(j(k d_n + phi_n)).
    ue = UePosition.polar(default_geo, 100, 0.1)
    h = irs_ue_channel(default_geo, ue, params)
    d = irs_ue_distances(default_geo, ue)
    phases = rng.uniform(-np.pi, np.pi, default_geo.N)
    w = random_complex(rng, default_geo.M)
    v = np.abs(h) * np.exp(1j * (2 * np.pi / params.wavelength * d + phases))
    expected = abs(v @ default_H @ w) ** 2 + SIGMA2
    assert received_power(h, phases, default_H, w, SIGMA2) == pytest.approx(expected, rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 12), st.integers(1, 5))
def test_received_power_bounds(seed, N, M):
    rng = np.random.default_rng(seed)
    H, h, w = random_complex(rng, N, M), random_complex(rng, N), random_complex(rng, M)
    phases = rng.uniform(-np.pi, np.pi, N)
    p = received_power(h, phases, H, w, SIGMA2)
    bound = cophased_signal_power(h, H, w) + SIGMA2
    assert SIGMA2 <= p <= bound * (1 + 1e-12)


def test_dimension_mismatch(rng):
    H = random_complex(rng, 4, 3)
    with pytest.raises(DimensionMismatchError):
        received_power(np.ones(4), np.zeros(4), H, np.ones(2), SIGMA2)
    with pytest.raises(DimensionMismatchError):
        received_power(np.ones(5), np.zeros(5), H, np.ones(3), SIGMA2)
    with pytest.raises(DimensionMismatchError):
        anticipated_snr(np.ones(3), H, np.ones(3), SIGMA2)


def test_anticipated_snr_single_element(rng):
    H, h, w = random_complex(rng, 1, 2), random_complex(rng, 1), random_complex(rng, 2)
    expected = 10 * np.log10(abs(h[0]) ** 2 * abs((H @ w)[0]) ** 2 / SIGMA2)
    assert anticipated_snr(h, H, w, SIGMA2) == pytest.approx(expected, rel=1e-12)


def test_anticipated_snr_scaling_and_phase_invariance(rng):
    H, h, w = random_complex(rng, 8, 3), random_complex(rng, 8), random_complex(rng, 3)
    base = anticipated_snr(h, H, w, SIGMA2)
    assert anticipated_snr(h, H, np.sqrt(5.0) * w, SIGMA2) == pytest.approx(base + 10 * np.log10(5.0))
    rot = np.exp(1j * 1.234)
    assert anticipated_snr(h * rot, H, w * np.conj(rot) ** 2, SIGMA2) == pytest.approx(base, abs=1e-12)


def test_noise_model_statistics():
    sigma2 = 3.0
    z = NoiseModel(sigma2, rng_stream(1, 2)).sample(10 ** 6)
    assert abs(z.mean()) < 3 * 5 * np.sqrt(sigma2) / np.sqrt(1e6)
    assert np.mean(np.abs(z - z.mean()) ** 2) == pytest.approx(sigma2, rel=0.01)
    # Circular symmetry: real and imaginary parts share the variance.
    assert z.real.var() == pytest.approx(sigma2 / 2, rel=0.01)
    assert z.imag.var() == pytest.approx(sigma2 / 2, rel=0.01)
