"""Phase-mask synthesis for the two SLM halves.

Masks store phases wrapped to ``[0, 2*pi)``.  ``levels == 0`` means a
continuous mask; ``levels == n`` means every phase is a multiple of
``2*pi/n`` (the 8-bit SLM corresponds to ``levels=256``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridMismatchError
from .fields import GridSpec, LGModeSpec, assoc_laguerre, lg_mode

__all__ = [
    "PhaseMask",
    "TWO_PI",
    "wrap_phase",
    "zero_mask",
    "constant_mask",
    "lg_phase_mask",
    "mode_phase_mask",
    "kinoform_lens",
    "combine",
    "negate",
    "quantize",
]

TWO_PI = 2.0 * np.pi


def wrap_phase(phase: np.ndarray) -> np.ndarray:
    """Wrap phases into [0, 2*pi)."""
    wrapped = np.mod(phase, TWO_PI)
    # mod can return 2*pi for tiny negative inputs; fold those back
    wrapped[wrapped >= TWO_PI] = 0.0
    return wrapped


@dataclass(frozen=True)
class PhaseMask:
    """Real phase raster in [0, 2*pi) with a quantization level count."""

    grid: GridSpec
    phase: np.ndarray
    levels: int = 0

    def __post_init__(self):
        phase = np.asarray(self.phase, dtype=float)
        if phase.shape != self.grid.shape:
            raise ValueError(f"phase raster {phase.shape} does not match grid {self.grid.shape}")
        if phase.min() < 0.0 or phase.max() >= TWO_PI:
            raise ValueError("phases must lie in [0, 2*pi); wrap before constructing")
        if self.levels < 0:
            raise ValueError(f"levels must be >= 0, got {self.levels}")
        object.__setattr__(self, "phase", phase)


def zero_mask(grid: GridSpec) -> PhaseMask:
    return PhaseMask(grid, np.zeros(grid.shape))


def constant_mask(grid: GridSpec, phase: float) -> PhaseMask:
    return PhaseMask(grid, wrap_phase(np.full(grid.shape, float(phase))))


def lg_phase_mask(p: int, l: int, w0: float, grid: GridSpec) -> PhaseMask:
    """Phase-only hologram of LG_{pl} at the waist.

    Helical term ``l*phi`` plus the pi jumps where the radial polynomial
    changes sign.
    """
    if p < 0:
        raise ValueError(f"radial index must be >= 0, got p={p}")
    r, phi = grid.polar()
    phase = l * phi
    if p > 0:
        radial = assoc_laguerre(p, abs(l), 2.0 * r**2 / w0**2)
        phase = phase + np.where(radial < 0.0, np.pi, 0.0)
    return PhaseMask(grid, wrap_phase(phase))


def mode_phase_mask(spec: LGModeSpec, grid: GridSpec) -> PhaseMask:
    """Phase of an arbitrary LG mode (any z), as displayed on the SLM."""
    f = lg_mode(spec, grid)
    return PhaseMask(grid, wrap_phase(np.angle(f.amps)))


def kinoform_lens(focal_length: float, wavelength: float, grid: GridSpec) -> PhaseMask:
    """Phase hologram equivalent to a thin lens of the given focal length."""
    if focal_length == 0.0:
        raise ValueError("focal length must be nonzero")
    if wavelength <= 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    x, y = grid.meshgrid()
    phase = -np.pi * (x**2 + y**2) / (wavelength * focal_length)
    return PhaseMask(grid, wrap_phase(phase))


def combine(masks: list[PhaseMask]) -> PhaseMask:
    """Pixel-wise sum of phases, wrapped; the result is continuous."""
    if not masks:
        raise ValueError("need at least one mask")
    grid = masks[0].grid
    total = np.zeros(grid.shape)
    for m in masks:
        if m.grid != grid:
            raise GridMismatchError(f"mask grids differ: {m.grid} vs {grid}")
        total = total + m.phase
    return PhaseMask(grid, wrap_phase(total), levels=0)


def negate(mask: PhaseMask) -> PhaseMask:
    """Mask with all phases negated (mod 2*pi)."""
    return PhaseMask(mask.grid, wrap_phase(-mask.phase), levels=mask.levels)


def quantize(mask: PhaseMask, levels: int) -> PhaseMask:
    """Round each phase to the nearest multiple of ``2*pi/levels``."""
    if levels < 2:
        raise ValueError(f"need at least 2 quantization levels, got {levels}")
    step = TWO_PI / levels
    idx = np.mod(np.round(mask.phase / step).astype(int), levels)
    return PhaseMask(mask.grid, idx * step, levels=levels)
