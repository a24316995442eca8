"""Spatially resolved Stokes analysis.

``stokes_direct`` reads the Stokes maps straight off the complex field;
``simulate_qwp_scan`` produces the camera frames of a rotating quarter-wave
plate in front of a fixed horizontal polarizer; ``stokes_from_frames``
reconstructs the maps from such a frame stack with the discrete Fourier
projections of the classic rotating-waveplate algorithm.

Sign conventions follow the package-wide circular basis
(``sigma_plus = (1, -i)/sqrt(2)`` has ``S3 = +S0``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import GridSpec
from .jones import VectorField, apply_jones, polarizer, quarter_wave_plate

__all__ = [
    "StokesMaps",
    "FrameStack",
    "stokes_direct",
    "uniform_qwp_angles",
    "simulate_qwp_scan",
    "stokes_from_frames",
    "degree_of_polarization",
]


@dataclass(frozen=True)
class StokesMaps:
    """Co-registered rasters of the four Stokes parameters."""

    grid: GridSpec
    s0: np.ndarray
    s1: np.ndarray
    s2: np.ndarray
    s3: np.ndarray

    def __post_init__(self):
        for name in ("s0", "s1", "s2", "s3"):
            arr = np.asarray(getattr(self, name), dtype=float)
            if arr.shape != self.grid.shape:
                raise ValueError(f"{name} raster {arr.shape} does not match grid {self.grid.shape}")
            object.__setattr__(self, name, arr)


@dataclass(frozen=True)
class FrameStack:
    """Intensity frames recorded at a set of QWP fast-axis angles."""

    grid: GridSpec
    angles: np.ndarray
    frames: np.ndarray

    def __post_init__(self):
        angles = np.asarray(self.angles, dtype=float)
        frames = np.asarray(self.frames, dtype=float)
        if angles.ndim != 1 or len(angles) < 5:
            raise ValueError(f"need at least 5 QWP angles, got {angles.size}")
        if len(np.unique(angles)) != len(angles):
            raise ValueError("QWP angles must be distinct")
        if frames.shape != (len(angles), *self.grid.shape):
            raise ValueError(
                f"frame stack shape {frames.shape} does not match "
                f"{(len(angles), *self.grid.shape)}"
            )
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "frames", frames)


def stokes_direct(f: VectorField) -> StokesMaps:
    """Stokes maps computed pixel-wise from the complex components."""
    ih = np.abs(f.h) ** 2
    iv = np.abs(f.v) ** 2
    cross = f.h * np.conj(f.v)
    return StokesMaps(
        grid=f.grid,
        s0=ih + iv,
        s1=ih - iv,
        s2=2.0 * cross.real,
        s3=2.0 * cross.imag,
    )


def uniform_qwp_angles(n: int = 16, offset: float = 0.0) -> np.ndarray:
    """``n`` uniformly spaced QWP angles covering half a turn."""
    return offset + np.arange(n) * np.pi / n


def simulate_qwp_scan(f: VectorField, angles) -> FrameStack:
    """Camera frames behind QWP(angle) followed by a horizontal polarizer."""
    angles = np.asarray(angles, dtype=float)
    frames = np.empty((len(angles), *f.grid.shape))
    pol = polarizer(0.0)
    for k, theta in enumerate(angles):
        out = apply_jones(apply_jones(f, quarter_wave_plate(theta)), pol)
        frames[k] = np.abs(out.h) ** 2 + np.abs(out.v) ** 2
    return FrameStack(f.grid, angles, frames)


def _check_uniform(angles: np.ndarray):
    n = len(angles)
    if n < 5:
        raise ValueError(f"the Fourier reconstruction needs >= 5 angles, got {n}")
    spacing = np.diff(np.sort(angles))
    expected = np.pi / n
    if not np.allclose(spacing, expected, rtol=0.0, atol=1e-9):
        raise ValueError(
            f"QWP angles must be uniformly spaced by pi/N = {expected:g} rad over half a "
            "turn; got spacings between "
            f"{spacing.min():g} and {spacing.max():g}"
        )


def stokes_from_frames(stack: FrameStack) -> StokesMaps:
    """Reconstruct Stokes maps from a rotating-QWP frame stack.

    Per pixel the intensity is fitted as
    ``I(theta) = (A + B sin 2theta + C cos 4theta + D sin 4theta) / 2``
    by discrete Fourier projection over the uniform angle grid, giving
    ``s0 = A - C``, ``s1 = 2C``, ``s2 = 2D``, ``s3 = B``.
    """
    _check_uniform(stack.angles)
    n = len(stack.angles)
    theta = stack.angles[:, None, None]
    frames = stack.frames
    a = (2.0 / n) * frames.sum(axis=0)
    b = (4.0 / n) * (frames * np.sin(2.0 * theta)).sum(axis=0)
    c = (4.0 / n) * (frames * np.cos(4.0 * theta)).sum(axis=0)
    d = (4.0 / n) * (frames * np.sin(4.0 * theta)).sum(axis=0)
    return StokesMaps(grid=stack.grid, s0=a - c, s1=2.0 * c, s2=2.0 * d, s3=b)


def degree_of_polarization(s: StokesMaps, floor: float = 1e-4) -> np.ma.MaskedArray:
    """Pointwise degree of polarization, masked where s0 is negligible.

    Pixels with ``s0 < floor * max(s0)`` are masked out; elsewhere the value
    is clamped to ``[0, 1 + 1e-9]`` to absorb rounding.
    """
    s0_max = s.s0.max()
    mask = s.s0 < floor * s0_max
    with np.errstate(divide="ignore", invalid="ignore"):
        dop = np.sqrt(s.s1**2 + s.s2**2 + s.s3**2) / s.s0
    dop = np.clip(dop, 0.0, 1.0 + 1e-9)
    return np.ma.MaskedArray(dop, mask=mask)
