"""Small complex linear-algebra kernels used throughout the package."""

import numpy as np

from .exceptions import NoConvergenceError, ZeroMatrixError

__all__ = [
    "phase_only",
    "fix_global_phase",
    "top_right_singular_vector",
    "dbm_to_watts",
    "watts_to_dbm",
    "rng_stream",
]

# Entries at or below this magnitude are ignored when fixing the global phase.
PHASE_REF_MIN = 1e-12


def phase_only(x):
    """Normalize every element of `x` to unit modulus.

    Zero entries map to ``1 + 0j``.

    Parameters
    ----------
    x : array_like
        Complex vector or matrix.

    Returns
    -------
    np.ndarray
        Complex array of the same shape with ``|out| == 1`` everywhere.
    """
    x = np.asarray(x, dtype=complex)
    out = np.ones_like(x)
    nz = x != 0
    # Via the angle rather than x / |x|, which breaks for subnormal or huge x.
    out[nz] = np.exp(1j * np.angle(x[nz]))
    return out


def fix_global_phase(v):
    """Rotate `v` so its first non-negligible entry is real and positive."""
    v = np.asarray(v, dtype=complex)
    idx = np.flatnonzero(np.abs(v) > PHASE_REF_MIN)
    if idx.size == 0:
        return v.copy()
    ref = v[idx[0]]
    return v * (np.conj(ref) / abs(ref))


def top_right_singular_vector(A, tol=1e-10, max_iter=10_000, seed=0):
    """Dominant right singular pair of `A` by power iteration on ``A^H A``.

    The iteration starts from the normalized all-ones vector. If the
    Rayleigh quotient is exactly zero at the start (the start vector lies in
    the null space), it restarts once from a Gaussian vector drawn with
    `seed`. Iteration stops when the relative change of the Rayleigh
    quotient drops below `tol`.

    Parameters
    ----------
    A : array_like, shape (N, M)
    tol : float
        Relative Rayleigh-quotient change that counts as converged.
    max_iter : int
    seed : int
        Seed of the fallback start vector.

    Returns
    -------
    v : np.ndarray, shape (M,)
        Unit-norm vector, global phase fixed by :func:`fix_global_phase`.
    sigma_max : float

    Raises
    ------
    ZeroMatrixError
        If every entry of `A` is zero.
    NoConvergenceError
        If the stopping rule is not met within `max_iter` iterations.
    """
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    if A.size == 0 or not np.any(A):
        raise ZeroMatrixError("power iteration needs a nonzero matrix")
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be > 0 and max_iter >= 1")

    gram = A.conj().T @ A
    m = gram.shape[0]
    v = np.ones(m, dtype=complex) / np.sqrt(m)
    q = np.real(np.vdot(v, gram @ v))
    if q <= 0.0:
        rng = rng_stream(seed, 0)
        v = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        v /= np.linalg.norm(v)
        q = np.real(np.vdot(v, gram @ v))

    for _ in range(max_iter):
        x = gram @ v
        v = x / np.linalg.norm(x)
        q_new = np.real(np.vdot(v, gram @ v))
        if abs(q_new - q) <= tol * q_new:
            return fix_global_phase(v), float(np.sqrt(q_new))
        q = q_new
    raise NoConvergenceError(
        f"power iteration did not reach tol={tol:g} in {max_iter} iterations"
    )


def dbm_to_watts(p_dbm):
    """Convert power in dBm to watts."""
    out = 10.0 ** ((np.asarray(p_dbm, dtype=float) - 30.0) / 10.0)
    return float(out) if out.ndim == 0 else out


def watts_to_dbm(p_watts):
    out = 10.0 * np.log10(np.asarray(p_watts, dtype=float)) + 30.0
    return float(out) if out.ndim == 0 else out


def rng_stream(seed, stream=0):
    """Independent, reproducible generator for the pair ``(seed, stream)``."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(stream)]))
