"""Angular-spectrum propagation: analytic beams, composition, sampling guards."""

import numpy as np
import pytest

from vecbeam.errors import SamplingError
from vecbeam.fields import (
    LGModeSpec,
    ScalarField,
    default_grid,
    gaussian_mode,
    lg_mode,
    mode_overlap,
    power,
)
from vecbeam.jones import VectorField, total_power
from vecbeam.propagation import angular_spectrum, propagate_vector

from conftest import RAYLEIGH, W0, WAVELENGTH


def second_moment_radius(f: ScalarField) -> float:
    """1/e^2 radius of a Gaussian from its intensity second moment."""
    x, y = f.grid.meshgrid()
    intensity = np.abs(f.amps) ** 2
    r2 = np.sum((x**2 + y**2) * intensity) / np.sum(intensity)
    return np.sqrt(2.0 * r2)


class TestIdentityAndGuards:
    def test_zero_distance_is_identity(self, grid128):
        g = gaussian_mode(W0, WAVELENGTH, grid128)
        assert angular_spectrum(g, 0.0, WAVELENGTH) is g

    def test_bad_wavelength(self, grid128):
        g = gaussian_mode(W0, WAVELENGTH, grid128)
        with pytest.raises(ValueError):
            angular_spectrum(g, 0.1, 0.0)

    def test_sampling_error_without_band_limit(self, grid128):
        g = gaussian_mode(W0, WAVELENGTH, grid128)
        z_max = grid128.nx * grid128.dx**2 / WAVELENGTH
        with pytest.raises(SamplingError):
            angular_spectrum(g, 2.0 * z_max, WAVELENGTH, band_limit=False)
        # just inside the limit is fine
        angular_spectrum(g, 0.9 * z_max, WAVELENGTH, band_limit=False)


class TestGaussianEvolution:
    @pytest.mark.parametrize("z_frac", [0.25, 0.5, 1.0, 2.0])
    def test_width_follows_analytic_w_of_z(self, z_frac):
        grid = default_grid(W0, 512, extent_factor=16.0)
        g = gaussian_mode(W0, WAVELENGTH, grid)
        z = z_frac * RAYLEIGH
        out = angular_spectrum(g, z, WAVELENGTH)
        expected = W0 * np.sqrt(1.0 + z_frac**2)
        assert second_moment_radius(out) == pytest.approx(expected, rel=1e-3)

    def test_energy_conserved(self, grid256):
        g = gaussian_mode(W0, WAVELENGTH, grid256)
        out = angular_spectrum(g, 0.7 * RAYLEIGH, WAVELENGTH)
        assert power(out) == pytest.approx(power(g), rel=1e-8)

    def test_matches_analytic_gaussian(self):
        grid = default_grid(W0, 512, extent_factor=16.0)
        g = gaussian_mode(W0, WAVELENGTH, grid)
        out = angular_spectrum(g, RAYLEIGH, WAVELENGTH)
        analytic = gaussian_mode(W0, WAVELENGTH, grid, z=RAYLEIGH)
        assert mode_overlap(out, analytic) > 0.9999


class TestLGEvolution:
    @pytest.mark.parametrize("p,l", [(0, 1), (0, 3), (1, 2)])
    def test_lg_self_similarity(self, p, l):
        grid = default_grid(W0, 512, extent_factor=16.0)
        start = lg_mode(LGModeSpec(p, l, W0, WAVELENGTH), grid)
        out = angular_spectrum(start, RAYLEIGH, WAVELENGTH)
        analytic = lg_mode(LGModeSpec(p, l, W0, WAVELENGTH, z=RAYLEIGH), grid)
        assert mode_overlap(out, analytic) > 0.9999


class TestComposition:
    def test_two_steps_equal_one(self, grid256):
        g = lg_mode(LGModeSpec(0, 1, W0, WAVELENGTH), grid256)
        z1, z2 = 0.3 * RAYLEIGH, 0.45 * RAYLEIGH
        once = angular_spectrum(g, z1 + z2, WAVELENGTH)
        twice = angular_spectrum(angular_spectrum(g, z1, WAVELENGTH), z2, WAVELENGTH)
        # the intermediate crop back to the unpadded window limits the
        # agreement to roughly the windowing error, well below 0.1 %
        scale = np.max(np.abs(once.amps))
        assert np.max(np.abs(once.amps - twice.amps)) < 1e-4 * scale

    def test_reversibility(self, grid256):
        g = lg_mode(LGModeSpec(1, 1, W0, WAVELENGTH), grid256)
        z = 0.4 * RAYLEIGH
        back = angular_spectrum(angular_spectrum(g, z, WAVELENGTH), -z, WAVELENGTH)
        scale = np.max(np.abs(g.amps))
        assert np.max(np.abs(back.amps - g.amps)) < 1e-4 * scale


class TestVectorPropagation:
    def test_components_independent(self, grid256):
        a = lg_mode(LGModeSpec(0, 1, W0, WAVELENGTH), grid256)
        b = lg_mode(LGModeSpec(0, -1, W0, WAVELENGTH), grid256)
        f = VectorField(grid256, a.amps, b.amps)
        z = 0.5 * RAYLEIGH
        out = propagate_vector(f, z, WAVELENGTH)
        assert np.array_equal(out.h, angular_spectrum(a, z, WAVELENGTH).amps)
        assert np.array_equal(out.v, angular_spectrum(b, z, WAVELENGTH).amps)
        assert total_power(out) == pytest.approx(total_power(f), rel=1e-8)

    def test_zero_distance_identity(self, grid128):
        g = gaussian_mode(W0, WAVELENGTH, grid128)
        f = VectorField(grid128, g.amps, g.amps)
        assert propagate_vector(f, 0.0, WAVELENGTH) is f
