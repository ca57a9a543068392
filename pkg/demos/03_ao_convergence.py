"""Alternating optimization: objective trace and the cost of a tight tolerance.

The default scenario has two almost equal singular values, so AO climbs
quickly and then creeps along a flat ridge.
"""

import numpy as np

from xlirs import AoOptions, PhysicalParams, SystemConfig, ao_beamformer, bs_irs_channel
from xlirs import build_system_geometry

params = PhysicalParams()
H = bs_irs_channel(build_system_geometry(SystemConfig()), params)

bv, trace = ao_beamformer(H, params.tx_power)
f = trace.objectives
print(f"converged={trace.converged} after {trace.iterations} iterations")
for i in (0, 1, 2, 5, 10, 20, 50, trace.iterations):
    print(f"  f[{i:3d}] = {f[i]:.8f}   gap to final {1 - f[i] / f[-1]:.2e}")

for eps in (1e-3, 1e-4, 1e-5, 1e-6):
    its = [ao_beamformer(H, params.tx_power, AoOptions(epsilon=eps, seed=s))[1].iterations
           for s in range(5)]
    print(f"epsilon {eps:.0e}: iterations over 5 seeds {its}")

print("monotone:", bool(np.all(np.diff(f) >= -1e-12 * f[1:])))
