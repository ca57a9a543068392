"""Free-space spherical-wavefront channels and received-power evaluation.

Both links use the phase convention ``exp(+j 2 pi l / lambda)``. The IRS-UE
link is returned directly as the row vector ``h^H`` (one entry per IRS
element), which is the form every downstream expression consumes.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DimensionMismatchError, InvalidConfigError
from .geometry import WAVELENGTH, bs_irs_distances, effective_apertures, irs_ue_distances
from .numerics import dbm_to_watts

__all__ = [
    "PhysicalParams",
    "NoiseModel",
    "bs_irs_channel",
    "irs_ue_channel",
    "received_power",
    "cophased_signal_power",
    "anticipated_snr",
    "amplitude_spread",
]


@dataclass(frozen=True)
class PhysicalParams:
    """Link-budget constants. Powers are linear watts."""

    wavelength: float = WAVELENGTH
    tx_power: float = dbm_to_watts(40.0)
    noise_power: float = dbm_to_watts(-94.0)
    bs_gain: float = 1.0
    irs_gain: float = 1.0
    ue_aperture: float = None

    def __post_init__(self):
        if self.ue_aperture is None:
            object.__setattr__(self, "ue_aperture", self.wavelength ** 2 / (4 * np.pi))
        for name in ("wavelength", "tx_power", "noise_power", "bs_gain", "irs_gain",
                     "ue_aperture"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise InvalidConfigError(name, f"must be > 0, got {value!r}")

    @classmethod
    def from_dbm(cls, tx_power_dbm=40.0, noise_power_dbm=-94.0, **kwargs):
        return cls(tx_power=dbm_to_watts(tx_power_dbm),
                   noise_power=dbm_to_watts(noise_power_dbm), **kwargs)

    @property
    def wavenumber(self):
        return 2 * np.pi / self.wavelength


@dataclass
class NoiseModel:
    """Circularly-symmetric complex Gaussian noise with total variance `variance`.

    Owns its generator; give each worker its own instance.
    """

    variance: float
    rng: np.random.Generator = field(repr=False)

    def sample(self, size):
        scale = np.sqrt(self.variance / 2.0)
        return scale * (self.rng.standard_normal(size) + 1j * self.rng.standard_normal(size))


def bs_irs_channel(geo, params):
    """Near-field BS-IRS channel ``H`` with shape (N, M).

    ``H[n, m] = sqrt(G_B A[n, m] / (4 pi l[n, m]^2)) exp(j k l[n, m])``.
    """
    dist = bs_irs_distances(geo)
    area = effective_apertures(geo)
    amp = np.sqrt(params.bs_gain * area / (4 * np.pi * dist ** 2))
    return amp * np.exp(1j * params.wavenumber * dist)


def irs_ue_channel(geo, ue, params):
    """IRS-UE row vector ``h^H`` with length N."""
    dist = irs_ue_distances(geo, ue)
    amp = np.sqrt(params.irs_gain * params.ue_aperture / (4 * np.pi * dist ** 2))
    return amp * np.exp(1j * params.wavenumber * dist)


def _incident(H, w):
    H = np.atleast_2d(np.asarray(H, dtype=complex))
    w = np.asarray(w, dtype=complex)
    if w.ndim != 1 or H.shape[1] != w.shape[0]:
        raise DimensionMismatchError(f"H has shape {H.shape} but w has shape {w.shape}")
    return H @ w


def _check_row(h, n):
    h = np.asarray(h, dtype=complex)
    if h.ndim != 1 or h.shape[0] != n:
        raise DimensionMismatchError(f"h must have length {n}, got shape {h.shape}")
    return h


def received_power(h, phases, H, w, noise_power):
    """UE received power ``|h^H Phi H w|^2 + sigma^2``, in watts.

    Parameters
    ----------
    h : array_like, shape (N,)
        The IRS-UE row vector ``h^H``.
    phases : array_like, shape (N,)
        IRS phase shifts in radians.
    H : array_like, shape (N, M)
    w : array_like, shape (M,)
    noise_power : float
    """
    incident = _incident(H, w)
    h = _check_row(h, incident.shape[0])
    phases = np.asarray(phases, dtype=float)
    if phases.shape != h.shape:
        raise DimensionMismatchError(f"phases must have length {h.shape[0]}")
    signal = np.sum(h * np.exp(1j * phases) * incident)
    return float(np.abs(signal) ** 2 + noise_power)


def cophased_signal_power(h, H, w):
    """Signal power with the IRS phases matched to the channel: ``(sum |h_n| |[Hw]_n|)^2``."""
    incident = _incident(H, w)
    h = _check_row(h, incident.shape[0])
    return float(np.sum(np.abs(h) * np.abs(incident)) ** 2)


def anticipated_snr(h, H, w, noise_power):
    """SNR in dB when the IRS co-phases the cascaded channel perfectly."""
    return float(10 * np.log10(cophased_signal_power(h, H, w) / noise_power))


def amplitude_spread(h):
    """``max|h_n| / min|h_n| - 1``; small values justify an equal-amplitude IRS-UE model."""
    mag = np.abs(np.asarray(h))
    return float(mag.max() / mag.min() - 1.0)
