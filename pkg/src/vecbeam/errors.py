"""Exception types shared across the toolkit."""


class GridMismatchError(ValueError):
    """Two rasters that must share a grid do not."""


class SamplingError(ValueError):
    """Grid sampling is too coarse for the requested propagation."""


class UndefinedCountError(ValueError):
    """A ring has no usable azimuthal structure to count lobes on."""
