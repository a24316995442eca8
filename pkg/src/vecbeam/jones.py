"""Jones calculus on pixelated vector fields.

Conventions:

* Jones vectors are ``(E_h, E_v)`` in the horizontal/vertical basis.
* ``waveplate(retardance, fast_axis)`` builds
  ``R(-theta) @ diag(1, exp(-i * retardance)) @ R(theta)``:
  the fast axis (at angle ``theta`` from horizontal) is the phase reference
  and the slow axis is retarded by ``exp(-i * delta)``.
* The circular basis is ``sigma_plus = (1, -i)/sqrt(2)`` and
  ``sigma_minus = (1, +i)/sqrt(2)``.  With these choices a quarter-wave
  plate at +45 deg maps H to sigma_minus and V to sigma_plus.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import GridMismatchError
from .fields import GridSpec, ScalarField, power as _scalar_power

__all__ = [
    "VectorField",
    "JonesMatrix",
    "SlmModel",
    "waveplate",
    "half_wave_plate",
    "quarter_wave_plate",
    "polarizer",
    "rotator",
    "apply_jones",
    "slm_reflect",
    "circular_components",
    "total_power",
    "SIGMA_PLUS",
    "SIGMA_MINUS",
]

SIGMA_PLUS = np.array([1.0, -1.0j]) / np.sqrt(2.0)
SIGMA_MINUS = np.array([1.0, 1.0j]) / np.sqrt(2.0)


@dataclass(frozen=True)
class VectorField:
    """Two co-registered complex rasters: horizontal and vertical component."""

    grid: GridSpec
    h: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.h, dtype=np.complex128)
        v = np.asarray(self.v, dtype=np.complex128)
        if h.shape != self.grid.shape or v.shape != self.grid.shape:
            raise ValueError(
                f"component shapes {h.shape}/{v.shape} do not match grid {self.grid.shape}"
            )
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "v", v)

    def component(self, name: str) -> ScalarField:
        if name not in ("h", "v"):
            raise ValueError(f"component must be 'h' or 'v', got {name!r}")
        return ScalarField(self.grid, getattr(self, name))


def total_power(f: VectorField) -> float:
    """Power summed over both polarization components."""
    return _scalar_power(f.component("h")) + _scalar_power(f.component("v"))


def circular_components(f: VectorField) -> tuple[np.ndarray, np.ndarray]:
    """Project onto the circular basis; returns ``(a_plus, a_minus)`` rasters."""
    a_plus = (f.h + 1j * f.v) / np.sqrt(2.0)
    a_minus = (f.h - 1j * f.v) / np.sqrt(2.0)
    return a_plus, a_minus


@dataclass(frozen=True)
class JonesMatrix:
    """2x2 complex polarization operator."""

    m_hh: complex
    m_hv: complex
    m_vh: complex
    m_vv: complex

    @classmethod
    def from_array(cls, m: np.ndarray) -> "JonesMatrix":
        m = np.asarray(m, dtype=np.complex128)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def as_array(self) -> np.ndarray:
        return np.array([[self.m_hh, self.m_hv], [self.m_vh, self.m_vv]])

    def __matmul__(self, other: "JonesMatrix") -> "JonesMatrix":
        return JonesMatrix.from_array(self.as_array() @ other.as_array())


def _rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]])


def waveplate(retardance: float, fast_axis: float) -> JonesMatrix:
    """Linear retarder with the given retardance and fast-axis angle."""
    core = np.diag([1.0, np.exp(-1j * retardance)])
    m = _rotation(-fast_axis) @ core @ _rotation(fast_axis)
    return JonesMatrix.from_array(m)


def half_wave_plate(fast_axis: float) -> JonesMatrix:
    return waveplate(np.pi, fast_axis)


def quarter_wave_plate(fast_axis: float) -> JonesMatrix:
    return waveplate(np.pi / 2.0, fast_axis)


def polarizer(axis: float) -> JonesMatrix:
    """Ideal linear polarizer: projector onto ``axis``."""
    c, s = np.cos(axis), np.sin(axis)
    return JonesMatrix(c * c, c * s, c * s, s * s)


def rotator(angle: float) -> JonesMatrix:
    """Polarization rotation by ``angle`` (not a retarder)."""
    return JonesMatrix.from_array(_rotation(-angle))


def apply_jones(f: VectorField, m: JonesMatrix) -> VectorField:
    """Pixel-wise matrix-vector product."""
    h = m.m_hh * f.h + m.m_hv * f.v
    v = m.m_vh * f.h + m.m_vv * f.v
    return VectorField(f.grid, h, v)


@dataclass(frozen=True)
class SlmModel:
    """Phase-only SLM acting on the horizontal component.

    ``eta_mod`` is the fraction of H-polarized power that receives the phase
    pattern; the rest is reflected specularly, in phase, on the same path.
    """

    eta_mod: float
    mask: "PhaseMask"

    def __post_init__(self):
        if not 0.0 <= self.eta_mod <= 1.0:
            raise ValueError(f"eta_mod must be in [0, 1], got {self.eta_mod}")


def slm_reflect(f: VectorField, slm: SlmModel) -> VectorField:
    """Polarization-selective reflection with an unmodulated coherent remnant.

    ``h' = (sqrt(eta) * exp(i phase) + sqrt(1 - eta)) * h``, ``v' = v``.
    """
    if slm.mask.grid != f.grid:
        raise GridMismatchError(f"mask grid {slm.mask.grid} does not match field grid {f.grid}")
    eta = slm.eta_mod
    gain = np.sqrt(eta) * np.exp(1j * slm.mask.phase) + np.sqrt(1.0 - eta)
    return replace(f, h=gain * f.h)
