import numpy as np
import pytest

from xlirs import (
    PhysicalParams, SystemConfig, angle_beamformer, ao_beamformer, bs_irs_channel,
    build_system_geometry, svd_beamformer,
)

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def params():
    return PhysicalParams()


@pytest.fixture(scope="session")
def default_geo():
    return build_system_geometry(SystemConfig())


@pytest.fixture(scope="session")
def default_H(default_geo, params):
    return bs_irs_channel(default_geo, params)


@pytest.fixture(scope="session")
def default_beams(default_geo, default_H, params):
    """Beamformers of the three schemes on the baseline scenario."""
    w_ao, trace = ao_beamformer(default_H, params.tx_power)
    return {
        "Angle": angle_beamformer(default_geo, params).w,
        "Svd": svd_beamformer(default_H, params.tx_power).w,
        "Ao": w_ao.w,
        "ao_trace": trace,
    }


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.fixture
def acceptance():
    """Record ``(criterion, passed, detail)`` for the end-of-run summary."""
    def report(number, passed, detail):
        _ACCEPTANCE[number] = (bool(passed), detail)
        return passed
    return report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}")
