"""Exception hierarchy shared by every xlirs module."""


class XlirsError(Exception):
    """Base class for all errors raised by this package."""


class ZeroMatrixError(XlirsError, ValueError):
    """The channel matrix has no nonzero entry."""


class NoConvergenceError(XlirsError, RuntimeError):
    """An iterative kernel exhausted its iteration budget."""


class DegenerateIterateError(XlirsError, RuntimeError):
    """An intermediate beamformer collapsed to the zero vector."""


class InvalidConfigError(XlirsError, ValueError):
    """A configuration value violates its invariant.

    ``field`` names the offending entry so that callers (the CLI in
    particular) can point at it.
    """

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class BehindSurfaceError(XlirsError, ValueError):
    """A transmitter lies on or behind the reflecting plane of an element."""


class DimensionMismatchError(XlirsError, ValueError):
    """Array shapes passed to an operation are inconsistent."""


class EmptyCodebookError(XlirsError, ValueError):
    """A codebook (or candidate set) has no codewords."""


class InvalidRingError(XlirsError, ValueError):
    """A polar-codebook ring distance is not strictly positive."""
