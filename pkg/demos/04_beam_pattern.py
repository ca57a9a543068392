"""How the incident amplitude profile shapes the IRS beam.

A broadside codeword is weighted by |[Hw]_n| for each scheme. Flat AO
weighting keeps the main lobe as narrow as an unweighted array.
"""

import numpy as np

from xlirs import PhysicalParams, SystemConfig, bs_irs_channel, build_system_geometry
from xlirs import design_beamformer
from xlirs.training import dft_codebook, half_power_beamwidth, irs_beam_pattern

params = PhysicalParams()
geo = build_system_geometry(SystemConfig())
H = bs_irs_channel(geo, params)
codeword = dft_codebook(geo, params.wavelength)[geo.N // 2]
grid = np.linspace(-1, 1, 4001)

weights = {"Uniform": np.ones(geo.N)}
for scheme in ("Angle", "Svd", "Ao"):
    weights[scheme] = np.abs(H @ design_beamformer(scheme, H, geo, params).w)

for name, a in weights.items():
    g = irs_beam_pattern(a, codeword, grid, geo, params.wavelength)
    side = g[np.abs(grid) > 2.5 / geo.N].max()
    print(f"{name:8s} HPBW {half_power_beamwidth(grid, g):.5f}  peak sidelobe {20 * np.log10(side):6.1f} dB")
