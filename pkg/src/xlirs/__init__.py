"""Near-field XL-IRS channel simulation and BS beamforming for IRS beam training.

Subpackages and modules:

* :mod:`xlirs.numerics` - phase normalization, power iteration, dBm conversion, RNG streams
* :mod:`xlirs.geometry` - parallel-ULA BS/IRS layout and UE placement
* :mod:`xlirs.channel` - spherical-wavefront channels and received power
* :mod:`xlirs.beamform` - angle, SVD and AO beamformers
* :mod:`xlirs.training` - DFT/polar codebooks and two-phase beam training
* :mod:`xlirs.harness` - the experiment suite and its CSV output
"""

__version__ = "0.1.0"

from .beamform import (
    SCHEMES,
    AoOptions,
    AoTrace,
    BeamVector,
    angle_beamformer,
    ao_beamformer,
    design_beamformer,
    incident_l1_objective,
    svd_beamformer,
)
from .channel import (
    NoiseModel,
    PhysicalParams,
    anticipated_snr,
    bs_irs_channel,
    irs_ue_channel,
    received_power,
)
from .geometry import SystemConfig, SystemGeometry, UePosition, build_system_geometry
from .numerics import dbm_to_watts, phase_only, rng_stream, top_right_singular_vector
