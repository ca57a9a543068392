"""Two-phase beam training for a UE somewhere in front of the IRS.

A DFT sweep picks the strongest directions, then polar codewords refine
range. Accuracy is judged against the same sweep without noise.
"""

import numpy as np

from xlirs import PhysicalParams, SystemConfig, UePosition, bs_irs_channel
from xlirs import build_system_geometry, design_beamformer, irs_ue_channel
from xlirs.channel import NoiseModel, anticipated_snr
from xlirs.numerics import rng_stream
from xlirs.training import TwoPhaseTrainer

params = PhysicalParams()
geo = build_system_geometry(SystemConfig())
H = bs_irs_channel(geo, params)
trainer = TwoPhaseTrainer(geo, params)
print(f"composite codebook: {len(trainer.codebook)} codewords, rings {np.round(trainer.rings, 1)}")

beams = {s: design_beamformer(s, H, geo, params).w for s in ("Angle", "Svd", "Ao")}
trials = 200
for r in (20.0, 100.0, 200.0):
    line = [f"r = {r:5.0f} m"]
    for scheme, w in beams.items():
        hits, snr, ideal = 0, [], []
        for t in range(trials):
            u = rng_stream(1, 2 * t).uniform(-1, 1)
            h = irs_ue_channel(geo, UePosition.polar(geo, r, u), params)
            out = trainer.run(h, H @ w, NoiseModel(params.noise_power, rng_stream(1, 2 * t + 1)))
            hits += out.hit
            snr.append(out.achievable_snr)
            ideal.append(anticipated_snr(h, H, w, params.noise_power))
        line.append(f"{scheme}: acc {hits / trials:.2f} SNR {np.mean(snr):5.1f}/{np.mean(ideal):5.1f} dB")
    print("  ".join(line))
