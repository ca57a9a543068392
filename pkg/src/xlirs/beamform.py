"""BS beamformers for IRS beam training: angle steering, SVD and AO.

The AO design maximizes ``||H w||_1`` under ``||w||_2^2 = P`` by
alternating between the unit-modulus auxiliary vector ``psi`` and ``w``.
Each half-step is the exact maximizer given the other, so the objective
``|psi^T H w|^2`` never decreases.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DegenerateIterateError, DimensionMismatchError, ZeroMatrixError
from .numerics import fix_global_phase, phase_only, rng_stream, top_right_singular_vector

__all__ = [
    "BeamVector",
    "AoOptions",
    "AoTrace",
    "steering_beamformer",
    "angle_beamformer",
    "svd_beamformer",
    "ao_beamformer",
    "incident_l1_objective",
    "SCHEMES",
    "design_beamformer",
]

SCHEMES = ("Angle", "Svd", "Ao")

# Floor for the relative convergence test when the objective is ~0.
_TINY = 1e-300


@dataclass(frozen=True, eq=False)
class BeamVector:
    w: np.ndarray
    power: float

    def __post_init__(self):
        norm2 = float(np.vdot(self.w, self.w).real)
        if not np.isclose(norm2, self.power, rtol=1e-9, atol=0.0):
            raise ValueError(f"||w||^2 = {norm2:.12g} differs from the power budget {self.power:.12g}")


@dataclass(frozen=True)
class AoOptions:
    """Settings of the AO solver.

    Attributes
    ----------
    epsilon : float
        Relative objective change below which iteration stops.
    max_iter : int
    init : np.ndarray or None
        Start beamformer; rescaled to the power budget. ``None`` draws a
        Gaussian start from ``rng_stream(seed, restart_index)``.
    seed : int
    restarts : int
        Number of random starts; the start with the largest final
        ``||H w||_1`` is kept. Ignored when `init` is given.
    """

    epsilon: float = 1e-6
    max_iter: int = 500
    init: np.ndarray = field(default=None, compare=False)
    seed: int = 0
    restarts: int = 1

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be > 0")
        if self.max_iter < 1 or self.restarts < 1:
            raise ValueError("max_iter and restarts must be >= 1")


@dataclass(frozen=True)
class AoTrace:
    objectives: np.ndarray
    converged: bool

    @property
    def iterations(self):
        return len(self.objectives) - 1


def _check_matrix(H):
    H = np.atleast_2d(np.asarray(H, dtype=complex))
    if H.size == 0 or not np.any(H):
        raise ZeroMatrixError("beamforming needs a nonzero channel")
    return H


def steering_beamformer(offsets, wavelength, u, power):
    """Uniform-amplitude beamformer steered to spatial angle `u`.

    ``w_m = sqrt(P/M) exp(j 2 pi / lambda * offsets[m] * u)``, which
    co-phases a far-field ``exp(+j k l)`` channel whose path length shrinks
    by ``offsets[m] * u`` across the array.
    """
    offsets = np.asarray(offsets, dtype=float)
    M = offsets.shape[0]
    w = np.sqrt(power / M) * np.exp(1j * 2 * np.pi / wavelength * offsets * u)
    return BeamVector(w, float(power))


def angle_beamformer(geo, params):
    """Far-field steering toward the IRS center, ignoring wavefront curvature."""
    direction = geo.irs_center - geo.bs_center
    direction = direction / np.linalg.norm(direction)
    u0 = float(direction @ geo.bs_axis)
    return steering_beamformer(geo.bs_offsets, params.wavelength, u0, params.tx_power)


def svd_beamformer(H, power, method="dense"):
    """Maximize the total incident power ``||H w||_2^2``.

    Parameters
    ----------
    H : array_like, shape (N, M)
    power : float
    method : {"dense", "power"}
        ``"dense"`` takes the leading right singular vector from a full SVD.
        ``"power"`` uses :func:`~xlirs.numerics.top_right_singular_vector`,
        which is cheaper but stalls when the top singular values are nearly
        degenerate, as they are for short BS-IRS distances.
    """
    H = _check_matrix(H)
    if method == "dense":
        _, _, vh = np.linalg.svd(H, full_matrices=False)
        v = fix_global_phase(vh[0].conj())
    elif method == "power":
        v, _ = top_right_singular_vector(H)
    else:
        raise ValueError(f"unknown method {method!r}")
    w = np.sqrt(power) * v / np.linalg.norm(v)
    return BeamVector(w, float(power))


def _normalize(w, power):
    norm = np.linalg.norm(w)
    if norm == 0:
        raise DegenerateIterateError("beamformer iterate vanished")
    return np.sqrt(power) * w / norm


def _ao_single(H, power, w0, epsilon, max_iter):
    w = _normalize(w0, power)
    psi = phase_only(np.conj(H @ w))
    objectives = [abs(psi @ H @ w) ** 2]
    converged = False
    for _ in range(max_iter):
        psi = phase_only(np.conj(H @ w))
        w = _normalize(np.conj(psi @ H), power)
        f = abs(psi @ H @ w) ** 2
        prev = objectives[-1]
        objectives.append(f)
        if abs(f - prev) < epsilon * max(f, _TINY):
            converged = True
            break
    return w, AoTrace(np.asarray(objectives), converged)


def ao_beamformer(H, power, options=None):
    """Maximize ``||H w||_1`` subject to ``||w||_2^2 = power`` by AO.

    Parameters
    ----------
    H : array_like, shape (N, M)
    power : float
    options : AoOptions, optional

    Returns
    -------
    BeamVector
    AoTrace
        Objectives ``f_0 .. f_I`` with ``f_i = |psi_i^T H w_i|^2``. The entry
        ``f_0`` pairs the start vector with its best ``psi``, so it equals
        ``||H w_0||_1^2``.
    """
    H = _check_matrix(H)
    options = options or AoOptions()
    M = H.shape[1]

    if options.init is not None:
        w0 = np.asarray(options.init, dtype=complex)
        if w0.shape != (M,):
            raise DimensionMismatchError(f"init must have shape ({M},), got {w0.shape}")
        starts = [w0]
    else:
        starts = []
        for k in range(options.restarts):
            rng = rng_stream(options.seed, k)
            starts.append(rng.standard_normal(M) + 1j * rng.standard_normal(M))

    best = None
    for w0 in starts:
        w, trace = _ao_single(H, power, w0, options.epsilon, options.max_iter)
        score = np.sum(np.abs(H @ w))
        if best is None or score > best[0]:
            best = (score, w, trace)
    _, w, trace = best
    return BeamVector(fix_global_phase(w), float(power)), trace


def incident_l1_objective(H, w):
    """``||H w||_1``, the sum of incident amplitudes over the IRS."""
    H = np.atleast_2d(np.asarray(H, dtype=complex))
    w = np.asarray(w, dtype=complex)
    if w.ndim != 1 or H.shape[1] != w.shape[0]:
        raise DimensionMismatchError(f"H has shape {H.shape} but w has shape {w.shape}")
    return float(np.sum(np.abs(H @ w)))


def design_beamformer(scheme, H, geo, params, ao_options=None):
    """Dispatch on a scheme name from :data:`SCHEMES`."""
    if scheme == "Angle":
        return angle_beamformer(geo, params)
    if scheme == "Svd":
        return svd_beamformer(H, params.tx_power)
    if scheme == "Ao":
        return ao_beamformer(H, params.tx_power, ao_options)[0]
    raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
