"""Parallel-ULA placement of the BS and the XL-IRS, plus the UE.

Coordinates are in meters. The IRS lies on the y axis centered at the
origin with its reflecting face toward +x; the BS array sits at
``x = bs_irs_distance``, parallel to it and centered on the same line.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import BehindSurfaceError, InvalidConfigError

__all__ = [
    "SystemConfig",
    "SystemGeometry",
    "UePosition",
    "build_system_geometry",
    "bs_irs_distances",
    "irs_ue_distances",
    "effective_aperture",
    "effective_apertures",
]

WAVELENGTH = 0.01
HALF_WAVE = WAVELENGTH / 2


@dataclass(frozen=True)
class SystemConfig:
    M: int = 64
    N: int = 200
    bs_irs_distance: float = 5.0
    bs_spacing: float = HALF_WAVE
    irs_spacing: float = HALF_WAVE

    def __post_init__(self):
        for name in ("M", "N"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise InvalidConfigError(name, f"must be an integer >= 1, got {value!r}")
        for name in ("bs_irs_distance", "bs_spacing", "irs_spacing"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise InvalidConfigError(name, f"must be > 0, got {value!r}")


@dataclass(frozen=True, eq=False)
class SystemGeometry:
    """Element coordinates of both arrays.

    Attributes
    ----------
    bs_coords : np.ndarray, shape (M, 3)
    irs_coords : np.ndarray, shape (N, 3)
    irs_normal : np.ndarray, shape (3,)
        Unit normal of the reflecting face.
    irs_spacing : float
    bs_spacing : float
    """

    bs_coords: np.ndarray
    irs_coords: np.ndarray
    irs_normal: np.ndarray
    irs_spacing: float
    bs_spacing: float

    @property
    def M(self):
        return self.bs_coords.shape[0]

    @property
    def N(self):
        return self.irs_coords.shape[0]

    @property
    def irs_center(self):
        return self.irs_coords.mean(axis=0)

    @property
    def bs_center(self):
        return self.bs_coords.mean(axis=0)

    @property
    def irs_axis(self):
        return _array_axis(self.irs_coords)

    @property
    def bs_axis(self):
        return _array_axis(self.bs_coords)

    @property
    def irs_offsets(self):
        """Signed position of each IRS element along its axis, from the center."""
        return (self.irs_coords - self.irs_center) @ self.irs_axis

    @property
    def bs_offsets(self):
        return (self.bs_coords - self.bs_center) @ self.bs_axis

    def translated(self, shift):
        shift = np.asarray(shift, dtype=float)
        return SystemGeometry(
            self.bs_coords + shift,
            self.irs_coords + shift,
            self.irs_normal,
            self.irs_spacing,
            self.bs_spacing,
        )


def _array_axis(coords):
    # Single-element arrays default to the y axis, matching the ULA layout.
    if coords.shape[0] < 2:
        return np.array([0.0, 1.0, 0.0])
    axis = coords[-1] - coords[0]
    return axis / np.linalg.norm(axis)


@dataclass(frozen=True, eq=False)
class UePosition:
    """UE location given by distance `r` and spatial angle ``u = sin(theta)``
    measured from the IRS center and boresight."""

    r: float
    u: float
    coord: np.ndarray

    @classmethod
    def polar(cls, geo, r, u):
        if not r > 0:
            raise InvalidConfigError("r", f"UE distance must be > 0, got {r!r}")
        if not -1.0 <= u <= 1.0:
            raise InvalidConfigError("u", f"spatial angle must lie in [-1, 1], got {u!r}")
        coord = geo.irs_center + r * polar_direction(geo, u)
        return cls(float(r), float(u), coord)


def polar_direction(geo, u):
    """Unit vector at spatial angle `u` from the IRS boresight, in the array plane."""
    return np.sqrt(1.0 - u * u) * geo.irs_normal + u * geo.irs_axis


def _centered(count, spacing):
    return (np.arange(count) - (count - 1) / 2.0) * spacing


def build_system_geometry(cfg):
    """Lay out the parallel, centered BS and IRS arrays described by `cfg`."""
    irs = np.zeros((cfg.N, 3))
    irs[:, 1] = _centered(cfg.N, cfg.irs_spacing)
    bs = np.zeros((cfg.M, 3))
    bs[:, 0] = cfg.bs_irs_distance
    bs[:, 1] = _centered(cfg.M, cfg.bs_spacing)
    return SystemGeometry(
        bs_coords=bs,
        irs_coords=irs,
        irs_normal=np.array([1.0, 0.0, 0.0]),
        irs_spacing=float(cfg.irs_spacing),
        bs_spacing=float(cfg.bs_spacing),
    )


def bs_irs_distances(geo):
    """Matrix ``l[n, m]`` of distances between IRS element n and BS antenna m."""
    diff = geo.bs_coords[None, :, :] - geo.irs_coords[:, None, :]
    return np.linalg.norm(diff, axis=2)


def irs_ue_distances(geo, ue):
    return np.linalg.norm(geo.irs_coords - ue.coord, axis=1)


def effective_apertures(geo):
    """Projected aperture of every IRS element toward every BS antenna.

    Each element is a square of side ``irs_spacing``; its effective area
    toward antenna m is that area times the cosine of the incidence angle.

    Returns
    -------
    np.ndarray, shape (N, M)

    Raises
    ------
    BehindSurfaceError
        If any antenna is on or behind the reflecting plane of an element.
    """
    diff = geo.bs_coords[None, :, :] - geo.irs_coords[:, None, :]
    cos = (diff @ geo.irs_normal) / np.linalg.norm(diff, axis=2)
    if np.any(cos <= 0):
        n, m = np.argwhere(cos <= 0)[0]
        raise BehindSurfaceError(
            f"BS antenna {m} is not in front of IRS element {n} (cos={cos[n, m]:.3g})"
        )
    return geo.irs_spacing ** 2 * cos


def effective_aperture(geo, n, m):
    """Effective aperture of IRS element `n` toward BS antenna `m`, in m^2."""
    diff = geo.bs_coords[m] - geo.irs_coords[n]
    cos = float(diff @ geo.irs_normal / np.linalg.norm(diff))
    if cos <= 0:
        raise BehindSurfaceError(
            f"BS antenna {m} is not in front of IRS element {n} (cos={cos:.3g})"
        )
    return geo.irs_spacing ** 2 * cos
