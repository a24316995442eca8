"""File formats: VBF1 complex fields, PGM rasters, frame manifests, CSV grids.

VBF1 is a single ASCII header line ``VBF1 <nx> <ny> <dx> <dy> <ncomp>``
followed by little-endian float64 (re, im) pairs, row-major within each
component, one component after the other (H then V for vector fields).
"""

from __future__ import annotations

import csv
import re
from pathlib import Path

import numpy as np

from .fields import GridSpec, ScalarField
from .jones import VectorField
from .polarimetry import StokesMaps

__all__ = [
    "write_vbf",
    "read_vbf",
    "write_pgm",
    "read_pgm",
    "phase_to_pgm",
    "pgm_to_phase",
    "write_intensity_pgm",
    "write_manifest",
    "read_manifest",
    "write_stokes_vbf",
    "write_stokes_csv",
]

_TWO_PI = 2.0 * np.pi


def _format_float(x: float) -> str:
    return repr(float(x))


def _components(field) -> list[np.ndarray]:
    if isinstance(field, ScalarField):
        return [field.amps]
    if isinstance(field, VectorField):
        return [field.h, field.v]
    raise TypeError(f"cannot serialize {type(field).__name__}")


def write_vbf(path, field) -> None:
    """Write a ScalarField or VectorField in the VBF1 format."""
    comps = _components(field)
    grid = field.grid
    header = (
        f"VBF1 {grid.nx} {grid.ny} {_format_float(grid.dx)} "
        f"{_format_float(grid.dy)} {len(comps)}\n"
    )
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        for comp in comps:
            pairs = np.empty((grid.ny, grid.nx, 2), dtype="<f8")
            pairs[..., 0] = comp.real
            pairs[..., 1] = comp.imag
            fh.write(pairs.tobytes())


def read_vbf(path):
    """Read a VBF1 file; returns a ScalarField (ncomp=1) or VectorField (ncomp=2)."""
    with open(path, "rb") as fh:
        header = fh.readline().decode("ascii").strip()
        parts = header.split()
        if len(parts) != 6 or parts[0] != "VBF1":
            raise ValueError(f"{path}: not a VBF1 file (header {header!r})")
        nx, ny = int(parts[1]), int(parts[2])
        dx, dy = float(parts[3]), float(parts[4])
        ncomp = int(parts[5])
        grid = GridSpec(nx=nx, ny=ny, dx=dx, dy=dy)
        body = fh.read()
    expected = ncomp * ny * nx * 2
    if len(body) != 8 * expected:
        raise ValueError(
            f"{path}: expected {expected} float64 values, found a {len(body)}-byte payload"
        )
    raw = np.frombuffer(body, dtype="<f8")
    pairs = raw.reshape(ncomp, ny, nx, 2)
    comps = [pairs[k, ..., 0] + 1j * pairs[k, ..., 1] for k in range(ncomp)]
    if ncomp == 1:
        return ScalarField(grid, comps[0])
    if ncomp == 2:
        return VectorField(grid, comps[0], comps[1])
    raise ValueError(f"{path}: unsupported component count {ncomp}")


def write_pgm(path, values: np.ndarray, maxval: int) -> None:
    """Write a binary PGM (P5); 16-bit samples are big-endian per the format."""
    values = np.asarray(values)
    if values.min() < 0 or values.max() > maxval:
        raise ValueError(f"pixel values outside [0, {maxval}]")
    ny, nx = values.shape
    dtype = ">u2" if maxval > 255 else "u1"
    with open(path, "wb") as fh:
        fh.write(f"P5\n{nx} {ny}\n{maxval}\n".encode("ascii"))
        fh.write(values.astype(dtype).tobytes())


def read_pgm(path) -> tuple[np.ndarray, int]:
    """Read a binary (P5) or ASCII (P2) PGM; returns (values, maxval)."""
    data = Path(path).read_bytes()
    m = re.match(rb"(P[25])\s+(?:#[^\n]*\n\s*)*(\d+)\s+(\d+)\s+(\d+)\s", data)
    if not m:
        raise ValueError(f"{path}: not a PGM file")
    magic, nx, ny, maxval = m.group(1), int(m.group(2)), int(m.group(3)), int(m.group(4))
    body = data[m.end():]
    if magic == b"P5":
        dtype = ">u2" if maxval > 255 else "u1"
        values = np.frombuffer(body, dtype=dtype, count=nx * ny).reshape(ny, nx)
    else:
        values = np.array(body.split()[: nx * ny], dtype=int).reshape(ny, nx)
    return values.astype(int), maxval


def phase_to_pgm(path, mask) -> None:
    """Export a phase mask as 8-bit grayscale: value = round(phase/2pi * 255)."""
    values = np.round(mask.phase / _TWO_PI * 255.0).astype(int)
    write_pgm(path, values, 255)


def pgm_to_phase(path, dx: float, dy: float):
    """Import an 8-bit mask written by :func:`phase_to_pgm`."""
    from .masks import PhaseMask

    values, maxval = read_pgm(path)
    if maxval != 255:
        raise ValueError(f"{path}: mask PGM must be 8-bit (maxval 255), got {maxval}")
    phase = values * (_TWO_PI / 255.0)
    phase = np.minimum(phase, np.nextafter(_TWO_PI, 0.0))
    grid = GridSpec(nx=values.shape[1], ny=values.shape[0], dx=dx, dy=dy)
    return PhaseMask(grid, phase)


def write_intensity_pgm(path, intensity: np.ndarray, sidecar: bool = True) -> float:
    """Write an intensity raster as 16-bit PGM, linearly scaled to the max.

    Returns the scale (intensity per count); a ``<path>.txt`` sidecar records
    it so the raster stays quantitative.
    """
    intensity = np.asarray(intensity, dtype=float)
    peak = float(intensity.max())
    scale = peak / 65535.0 if peak > 0 else 1.0
    counts = np.round(intensity / scale).astype(int) if peak > 0 else np.zeros_like(
        intensity, dtype=int
    )
    write_pgm(path, counts, 65535)
    if sidecar:
        Path(f"{path}.txt").write_text(
            f"format = pgm16-linear\nscale_intensity_per_count = {_format_float(scale)}\n"
            f"peak_intensity = {_format_float(peak)}\n"
        )
    return scale


def write_manifest(path, entries: list[tuple[float, str]]) -> None:
    """Write a frame manifest: one ``angle_degrees filename`` line per frame."""
    lines = [f"{_format_float(angle_deg)} {name}\n" for angle_deg, name in entries]
    Path(path).write_text("".join(lines))


def read_manifest(path) -> list[tuple[float, str]]:
    entries = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(maxsplit=1)
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'angle_degrees filename'")
        try:
            angle = float(parts[0])
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: bad angle {parts[0]!r}") from exc
        entries.append((angle, parts[1]))
    return entries


def write_stokes_vbf(directory, maps: StokesMaps, prefix: str = "stokes") -> list[Path]:
    """Write S0..S3 as four single-component VBF1 files (imaginary parts zero)."""
    directory = Path(directory)
    paths = []
    for k, raster in enumerate((maps.s0, maps.s1, maps.s2, maps.s3)):
        path = directory / f"{prefix}_s{k}.vbf"
        write_vbf(path, ScalarField(maps.grid, raster.astype(complex)))
        paths.append(path)
    return paths


def write_stokes_csv(directory, maps: StokesMaps, prefix: str = "stokes") -> list[Path]:
    """Write S0..S3 as four CSV grids (one row per grid row)."""
    directory = Path(directory)
    paths = []
    for k, raster in enumerate((maps.s0, maps.s1, maps.s2, maps.s3)):
        path = directory / f"{prefix}_s{k}.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            for row in raster:
                writer.writerow([_format_float(x) for x in row])
        paths.append(path)
    return paths
