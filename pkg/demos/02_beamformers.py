"""The three BS beamformers and what each one optimizes.

Angle steering points at the IRS centre, the SVD beam maximizes total
incident power and AO maximizes the sum of incident amplitudes, which is
what a co-phasing IRS actually collects.
"""

import numpy as np

from xlirs import (
    PhysicalParams, SystemConfig, UePosition, anticipated_snr, bs_irs_channel,
    build_system_geometry, design_beamformer, irs_ue_channel,
)

params = PhysicalParams()
geo = build_system_geometry(SystemConfig())
H = bs_irs_channel(geo, params)
h = irs_ue_channel(geo, UePosition.polar(geo, 100.0, 0.0), params)

print(f"{'scheme':6s} {'l1 |Hw|':>10s} {'l2 |Hw|':>10s} {'std |Hw|_n':>11s} {'SNR dB':>8s}")
for scheme in ("Angle", "Svd", "Ao"):
    w = design_beamformer(scheme, H, geo, params).w
    x = H @ w
    print(f"{scheme:6s} {np.abs(x).sum():10.5f} {np.linalg.norm(x):10.5f} "
          f"{np.abs(x).std():11.3e} {anticipated_snr(h, H, w, params.noise_power):8.2f}")

# AO spreads power evenly, SVD packs the most energy but unevenly.
