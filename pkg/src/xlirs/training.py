"""IRS codebooks and codebook-based beam training.

Two-phase training sweeps a far-field DFT codebook, keeps the `K`
strongest angles, then probes near-field (polar) codewords on a ring grid
at those angles. All argmax decisions break ties toward the lowest index.

The BS-IRS channel and the BS beamformer are known at the IRS, so by
default every codeword is applied on top of a compensation of the incident
phase ``angle([H w]_n)``. The incident amplitudes then act as a fixed
weighting of the codeword, and the codeword only has to match ``h``.
Pass ``compensate=False`` to apply raw codeword phases instead.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DimensionMismatchError, EmptyCodebookError, InvalidRingError
from .geometry import polar_direction

__all__ = [
    "Codeword",
    "Codebook",
    "TrainingOutcome",
    "TwoPhaseTrainer",
    "default_rings",
    "dft_codebook",
    "polar_codebook",
    "composite_codebook",
    "codeword_powers",
    "cascade_vector",
    "noise_free_best_codeword",
    "two_phase_training",
    "irs_beam_pattern",
    "half_power_beamwidth",
    "same_configuration",
]

FAR_FIELD_RING = 1e6
SAME_PHASE_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class Codeword:
    """IRS phase configuration; element n is multiplied by ``exp(j phases[n])``.

    ``r`` is ``None`` for far-field (DFT) codewords.
    """

    phases: np.ndarray
    u: float
    r: float = None

    @property
    def kind(self):
        return "FarField" if self.r is None else "NearField"


@dataclass(frozen=True, eq=False)
class Codebook:
    codewords: tuple
    kind: str

    def __post_init__(self):
        if len(self.codewords) == 0:
            raise EmptyCodebookError(f"{self.kind} codebook is empty")

    def __len__(self):
        return len(self.codewords)

    def __getitem__(self, i):
        return self.codewords[i]

    @property
    def phase_matrix(self):
        cached = self.__dict__.get("_phase_matrix")
        if cached is None:
            cached = np.stack([cw.phases for cw in self.codewords])
            object.__setattr__(self, "_phase_matrix", cached)
        return cached

    @property
    def response_matrix(self):
        """``exp(j phases)`` with one row per codeword."""
        cached = self.__dict__.get("_response")
        if cached is None:
            cached = np.exp(1j * self.phase_matrix)
            object.__setattr__(self, "_response", cached)
        return cached


@dataclass(frozen=True, eq=False)
class TrainingOutcome:
    """Result of one training run.

    Indices refer to the trainer's composite codebook. ``tested_indices``
    and ``measured_powers`` are aligned: DFT sweep first, then the polar
    probes in the order they were measured. ``hit`` is true when the
    selected codeword is the oracle codeword or an identical IRS
    configuration (see :func:`same_configuration`).
    """

    selected_index: int
    oracle_index: int
    tested_indices: np.ndarray
    measured_powers: np.ndarray
    achievable_snr: float
    hit: bool


def default_rings(r_min=5.0, r_max=300.0, count=10, far_field=False):
    """Ring distances uniformly spaced in ``1/r``, plus an optional far-field ring.

    The far-field ring is off by default: at ``r = 1e6`` m its codewords
    match the DFT codewords already carried into the polar stage, and the
    resulting near-ties make the selection depend on rounding.
    """
    rings = 1.0 / np.linspace(1.0 / r_min, 1.0 / r_max, count)
    if far_field:
        rings = np.append(rings, FAR_FIELD_RING)
    return rings


def same_configuration(a, b, atol=SAME_PHASE_TOL):
    """True when two codewords apply the same phase to every element, modulo 2 pi.

    At end-fire (``u = +-1``) every ring collapses onto the DFT codeword,
    so distinct codebook indices can describe one configuration.
    """
    diff = np.angle(np.exp(1j * (np.asarray(a.phases) - np.asarray(b.phases))))
    return bool(np.max(np.abs(diff)) < atol)


def _dft_angles(N):
    return -1.0 + 2.0 * np.arange(N) / N


def dft_codebook(geo, wavelength):
    """N far-field codewords on the spatial-angle grid ``u_k = -1 + 2k/N``.

    Codeword k points the IRS at spatial angle ``u_k``:
    ``phases[n] = 2 pi / lambda * offsets[n] * u_k``.
    """
    offsets = geo.irs_offsets
    k = 2 * np.pi / wavelength
    words = tuple(Codeword(k * offsets * u, float(u)) for u in _dft_angles(geo.N))
    return Codebook(words, "DFT")


def _polar_phases(geo, wavelength, u, r):
    point = geo.irs_center + r * polar_direction(geo, u)
    dist = np.linalg.norm(geo.irs_coords - point, axis=1)
    # Subtracting r before scaling keeps the phases small for large rings.
    return -2 * np.pi / wavelength * (dist - r)


def polar_codebook(geo, wavelength, angles, rings):
    """One near-field codeword per (angle, ring) pair, angle-major.

    The codeword for ``(u, r)`` exactly co-phases a point source located
    at distance r and spatial angle u from the IRS center.
    """
    angles = np.atleast_1d(np.asarray(angles, dtype=float))
    rings = np.atleast_1d(np.asarray(rings, dtype=float))
    if angles.size == 0 or rings.size == 0:
        raise EmptyCodebookError("polar codebook needs at least one angle and one ring")
    if np.any(rings <= 0):
        raise InvalidRingError(f"ring distances must be > 0, got {rings.min()!r}")
    words = tuple(
        Codeword(_polar_phases(geo, wavelength, u, r), float(u), float(r))
        for u in angles for r in rings
    )
    return Codebook(words, "Polar")


def composite_codebook(geo, wavelength, rings):
    """DFT codebook followed by polar codewords at every DFT angle.

    Index ``N + k * len(rings) + j`` is the polar codeword at DFT angle k and
    ring j.
    """
    dft = dft_codebook(geo, wavelength)
    polar = polar_codebook(geo, wavelength, _dft_angles(geo.N), rings)
    return Codebook(dft.codewords + polar.codewords, "TwoPhaseComposite")


def codeword_powers(cascade, responses):
    """Noise-free signal power ``|sum_n c_n exp(j phi_n)|^2`` per codeword row.

    `cascade` is the per-element product ``h^H * (H w)``.
    """
    return np.abs(responses @ cascade) ** 2


def noise_free_best_codeword(h, H, w, codebook, compensate=True):
    """Index of the codeword with the largest noise-free received power."""
    if codebook is None or len(codebook) == 0:
        raise EmptyCodebookError("no codewords to choose from")
    cascade = _cascade(h, H, w, compensate)
    if codebook.response_matrix.shape[1] != cascade.shape[0]:
        raise DimensionMismatchError("codeword length differs from the IRS size")
    return int(np.argmax(codeword_powers(cascade, codebook.response_matrix)))


def cascade_vector(h, incident, compensate=True):
    """Per-element product seen by the codeword, ``h_n [Hw]_n`` or ``h_n |[Hw]_n|``."""
    return h * (np.abs(incident) if compensate else incident)


def _cascade(h, H, w, compensate=True):
    H = np.atleast_2d(np.asarray(H, dtype=complex))
    w = np.asarray(w, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if H.shape[1] != w.shape[0] or H.shape[0] != h.shape[0]:
        raise DimensionMismatchError(
            f"inconsistent shapes: h {h.shape}, H {H.shape}, w {w.shape}"
        )
    return cascade_vector(h, H @ w, compensate)


def _top_k(values, k):
    # Stable sort on the negated values keeps the lowest index first on ties.
    return np.sort(np.argsort(-values, kind="stable")[:k])


class TwoPhaseTrainer:
    """Two-phase DFT-then-polar beam training on a fixed geometry.

    Parameters
    ----------
    geo : SystemGeometry
    params : PhysicalParams
    K : int
        Number of candidate angles carried from the DFT sweep to the polar stage.
    rings : array_like, optional
        Ring distances of the polar stage. Defaults to :func:`default_rings`.
    compensate : bool
        Apply codewords on top of the incident-phase compensation.
    """

    def __init__(self, geo, params, K=3, rings=None, compensate=True):
        if K < 1:
            raise ValueError("K must be >= 1")
        self.geo = geo
        self.params = params
        self.N = geo.N
        self.K = min(int(K), geo.N)
        self.rings = default_rings() if rings is None else np.asarray(rings, dtype=float)
        self.compensate = compensate
        self.codebook = composite_codebook(geo, params.wavelength, self.rings)
        self._responses = self.codebook.response_matrix

    def _polar_indices(self, angle_indices):
        R = len(self.rings)
        return (self.N + angle_indices[:, None] * R + np.arange(R)[None, :]).ravel()

    def _sweep(self, cascade, noise):
        """Run both phases; returns the tested indices and measured |y|^2."""
        def measure(idx):
            y = self._responses[idx] @ cascade
            if noise is not None:
                y = y + noise.sample(len(idx))
            return np.abs(y) ** 2

        dft_idx = np.arange(self.N)
        dft_power = measure(dft_idx)
        winners = _top_k(dft_power, self.K)
        polar_idx = self._polar_indices(winners)
        polar_power = measure(polar_idx)
        tested = np.concatenate([dft_idx, polar_idx])
        measured = np.concatenate([dft_power, polar_power])
        candidates = np.concatenate([winners, polar_idx])
        cand_power = np.concatenate([dft_power[winners], polar_power])
        order = np.argsort(candidates, kind="stable")
        choice = candidates[order][np.argmax(cand_power[order])]
        return int(choice), tested, measured

    def run(self, h, incident, noise):
        """Train once.

        Parameters
        ----------
        h : np.ndarray, shape (N,)
            IRS-UE row vector ``h^H``.
        incident : np.ndarray, shape (N,)
            Incident signal ``H w`` on the IRS.
        noise : NoiseModel
            Source of the per-measurement receiver noise.
        """
        h = np.asarray(h, dtype=complex)
        incident = np.asarray(incident, dtype=complex)
        if h.shape != (self.N,) or incident.shape != (self.N,):
            raise DimensionMismatchError(f"h and incident must both have length {self.N}")
        cascade = cascade_vector(h, incident, self.compensate)
        selected, tested, measured = self._sweep(cascade, noise)
        oracle, _, _ = self._sweep(cascade, None)
        signal = float(np.abs(self._responses[selected] @ cascade) ** 2)
        snr = 10 * np.log10(signal / self.params.noise_power)
        hit = selected == oracle or same_configuration(self.codebook[selected],
                                                       self.codebook[oracle])
        return TrainingOutcome(selected, oracle, tested, measured, float(snr), bool(hit))


def two_phase_training(h, H, w, geo, params, noise, K=3, rings=None, compensate=True):
    """One-shot convenience wrapper around :class:`TwoPhaseTrainer`."""
    H = np.atleast_2d(np.asarray(H, dtype=complex))
    w = np.asarray(w, dtype=complex)
    if H.shape[1] != w.shape[0]:
        raise DimensionMismatchError(f"H has shape {H.shape} but w has shape {w.shape}")
    trainer = TwoPhaseTrainer(geo, params, K=K, rings=rings, compensate=compensate)
    return trainer.run(h, H @ w, noise)


def irs_beam_pattern(amplitudes, codeword, u_grid, geo, wavelength):
    """Normalized far-field pattern of a codeword under amplitude weighting.

    ``g(u) = |sum_n a_n exp(j phi_n) exp(-j 2 pi / lambda * offsets[n] * u)|``,
    scaled so that its maximum over `u_grid` is 1. A codeword steered to
    ``u0`` peaks at ``u0``.
    """
    a = np.asarray(amplitudes, dtype=float)
    u = np.atleast_1d(np.asarray(u_grid, dtype=float))
    phases = np.asarray(codeword.phases if isinstance(codeword, Codeword) else codeword)
    if a.shape != phases.shape or a.shape[0] != geo.N:
        raise DimensionMismatchError("amplitudes and codeword must have one entry per element")
    k = 2 * np.pi / wavelength
    steer = np.exp(-1j * k * np.outer(u, geo.irs_offsets))
    g = np.abs(steer @ (a * np.exp(1j * phases)))
    peak = g.max()
    return g / peak if peak > 0 else g


def half_power_beamwidth(u_grid, gains):
    """Width in u of the contiguous region around the peak with ``g >= 1/sqrt(2)``."""
    u = np.asarray(u_grid, dtype=float)
    g = np.asarray(gains, dtype=float)
    level = g.max() / np.sqrt(2.0)
    peak = int(np.argmax(g))
    lo = peak
    while lo > 0 and g[lo - 1] >= level:
        lo -= 1
    hi = peak
    while hi < len(g) - 1 and g[hi + 1] >= level:
        hi += 1

    def crossing(i_in, i_out):
        # Linear interpolation between the last sample inside and the first outside.
        gi, go = g[i_in], g[i_out]
        t = (gi - level) / (gi - go) if gi != go else 0.0
        return u[i_in] + t * (u[i_out] - u[i_in])

    left = crossing(lo, lo - 1) if lo > 0 else u[0]
    right = crossing(hi, hi + 1) if hi < len(g) - 1 else u[-1]
    return float(right - left)
