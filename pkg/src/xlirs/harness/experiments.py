"""The six Monte-Carlo experiments, each producing a list of :class:`Record`."""

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..beamform import ao_beamformer, design_beamformer
from ..channel import NoiseModel, anticipated_snr, bs_irs_channel, irs_ue_channel
from ..geometry import UePosition, build_system_geometry
from ..numerics import phase_only, rng_stream
from ..training import Codeword, TwoPhaseTrainer, half_power_beamwidth, irs_beam_pattern

__all__ = [
    "Record",
    "WORKERS_ENV",
    "worker_count",
    "run_convergence_experiment",
    "run_power_distribution",
    "run_beam_pattern",
    "run_snr_vs_bsirs_distance",
    "run_training_experiments",
    "run_experiment",
    "ao_iteration_seconds",
]

WORKERS_ENV = "XLIRS_WORKERS"


@dataclass(frozen=True)
class Record:
    experiment: str
    scheme: str
    sweep_var: str
    sweep_value: object
    metric: str
    value: float
    trials: int
    seed: int


def worker_count():
    """Worker-pool size from ``$XLIRS_WORKERS``, else the machine's CPU count."""
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _scenario(cfg, system=None):
    system = system or cfg.system
    geo = build_system_geometry(system)
    H = bs_irs_channel(geo, cfg.physical)
    return geo, H


def _beamformers(cfg, geo, H):
    opts = cfg.ao_options()
    return {s: design_beamformer(s, H, geo, cfg.physical, opts).w for s in cfg.schemes}


def run_convergence_experiment(cfg):
    """AO objective trace for every ``[N, M]`` pair in the sweep."""
    records = []
    for N, M in cfg.sweep:
        _, H = _scenario(cfg, cfg.with_system(N=int(N), M=int(M)).system)
        _, trace = ao_beamformer(H, cfg.physical.tx_power, cfg.ao_options())
        label = f"{int(N)}x{int(M)}"

        def rec(metric, value):
            records.append(Record(cfg.experiment, "Ao", "N_x_M", label, metric, float(value),
                                  cfg.trials, cfg.seed))

        for i, f in enumerate(trace.objectives):
            rec(f"objective[{i:04d}]", f)
        rec("iterations", trace.iterations)
        rec("converged", float(trace.converged))
    return records


def run_power_distribution(cfg):
    """Incident power on every IRS element, with totals and spreads."""
    records = []
    for distance in cfg.sweep:
        geo, H = _scenario(cfg, cfg.with_system(bs_irs_distance=float(distance)).system)
        for scheme, w in _beamformers(cfg, geo, H).items():
            incident = H @ w
            power = np.abs(incident) ** 2

            def rec(metric, value):
                records.append(Record(cfg.experiment, scheme, "bs_irs_distance", float(distance),
                                      metric, float(value), cfg.trials, cfg.seed))

            for n, p in enumerate(power):
                rec(f"incident_power[{n:04d}]", p)
            rec("total_incident_power", power.sum())
            rec("std_incident_power", power.std())
            rec("std_incident_amplitude", np.abs(incident).std())
            rec("l1_incident", np.abs(incident).sum())
    return records


def run_beam_pattern(cfg):
    """Amplitude-weighted DFT beam patterns, one per scheme plus the unweighted one."""
    geo, H = _scenario(cfg)
    lam = cfg.physical.wavelength
    grid = np.linspace(-1.0, 1.0, cfg.pattern_points)
    weights = {s: np.abs(H @ w) for s, w in _beamformers(cfg, geo, H).items()}
    weights["Uniform"] = np.ones(geo.N)
    k = 2 * np.pi / lam
    records = []
    for u0 in cfg.sweep:
        # A DFT-style codeword steered exactly at u0, which need not lie on the DFT grid.
        codeword = Codeword(k * geo.irs_offsets * float(u0), float(u0))
        for scheme, a in weights.items():
            gains = irs_beam_pattern(a, codeword, grid, geo, lam)
            for u, g in zip(grid, gains):
                records.append(Record(cfg.experiment, scheme, "u", float(u),
                                      f"gain@{float(u0):g}", float(g), cfg.trials, cfg.seed))
            records.append(Record(cfg.experiment, scheme, "codeword_u", float(u0),
                                  "half_power_beamwidth", half_power_beamwidth(grid, gains),
                                  cfg.trials, cfg.seed))
    return records


def run_snr_vs_bsirs_distance(cfg):
    """Anticipated SNR per scheme versus BS-IRS distance, UE at the configured point."""
    records = []
    for distance in cfg.sweep:
        geo, H = _scenario(cfg, cfg.with_system(bs_irs_distance=float(distance)).system)
        ue = UePosition.polar(geo, cfg.ue_distance, cfg.ue_angle)
        h = irs_ue_channel(geo, ue, cfg.physical)
        for scheme, w in _beamformers(cfg, geo, H).items():
            snr = anticipated_snr(h, H, w, cfg.physical.noise_power)
            records.append(Record(cfg.experiment, scheme, "bs_irs_distance", float(distance),
                                  "anticipated_snr_db", snr, cfg.trials, cfg.seed))
    return records


def _trial_streams(seed, trial):
    """Per-trial UE angle and noise generators, shared by every scheme and distance."""
    return rng_stream(seed, 2 * trial), (seed, 2 * trial + 1)


def _training_point(cfg, geo, H, trainer, beams, r):
    params = cfg.physical
    incident = {s: H @ w for s, w in beams.items()}
    hits = {s: 0 for s in beams}
    achievable = {s: 0.0 for s in beams}
    anticipated = {s: 0.0 for s in beams}
    for t in range(cfg.trials):
        angle_rng, noise_key = _trial_streams(cfg.seed, t)
        ue = UePosition.polar(geo, float(r), float(angle_rng.uniform(-1.0, 1.0)))
        h = irs_ue_channel(geo, ue, params)
        for s in beams:
            noise = NoiseModel(params.noise_power, rng_stream(*noise_key))
            out = trainer.run(h, incident[s], noise)
            hits[s] += out.hit
            achievable[s] += out.achievable_snr
            anticipated[s] += anticipated_snr(h, H, beams[s], params.noise_power)
    n = cfg.trials
    return {s: (hits[s] / n, achievable[s] / n, anticipated[s] / n) for s in beams}


def run_training_experiments(cfg):
    """Two-phase training versus UE distance, UE angle uniform in [-1, 1].

    Trials use common random numbers: trial t draws the same UE angle and
    the same noise sequence at every distance and for every scheme.
    """
    geo, H = _scenario(cfg)
    beams = _beamformers(cfg, geo, H)
    trainer = TwoPhaseTrainer(geo, cfg.physical, K=cfg.training_K, rings=cfg.training_rings)
    distances = [float(r) for r in cfg.sweep]
    with ThreadPoolExecutor(max_workers=min(worker_count(), len(distances))) as pool:
        results = list(pool.map(lambda r: _training_point(cfg, geo, H, trainer, beams, r),
                                distances))

    if cfg.experiment == "AccuracyVsUeDistance":
        metrics = (("accuracy", 0),)
    else:
        metrics = (("achievable_snr_db", 1), ("anticipated_snr_db", 2))
    records = []
    for r, point in zip(distances, results):
        for scheme, values in point.items():
            for name, idx in metrics:
                records.append(Record(cfg.experiment, scheme, "ue_distance", r, name,
                                      float(values[idx]), cfg.trials, cfg.seed))
    return records


_RUNNERS = {
    "Convergence": run_convergence_experiment,
    "PowerDistribution": run_power_distribution,
    "BeamPattern": run_beam_pattern,
    "SnrVsBsIrsDistance": run_snr_vs_bsirs_distance,
    "AccuracyVsUeDistance": run_training_experiments,
    "AchievableSnrVsUeDistance": run_training_experiments,
}


def run_experiment(cfg):
    return _RUNNERS[cfg.experiment](cfg)


def ao_iteration_seconds(M, N, repeats=10, seed=0):
    """Median wall time of one AO update (psi then w) on a random N x M channel."""
    rng = rng_stream(seed, 0)
    H = rng.standard_normal((N, M)) + 1j * rng.standard_normal((N, M))
    w = rng.standard_normal(M) + 1j * rng.standard_normal(M)
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        psi = phase_only(np.conj(H @ w))
        w_new = np.conj(psi @ H)
        w_new /= np.linalg.norm(w_new)
        abs(psi @ (H @ w_new))
        times.append(time.perf_counter() - start)
    return float(np.median(times))
