"""Rotating-QWP Stokes polarimetry and its Fourier reconstruction."""

import numpy as np
import pytest

from vecbeam.fields import GridSpec, default_grid
from vecbeam.jones import SIGMA_MINUS, SIGMA_PLUS, VectorField
from vecbeam.polarimetry import (
    FrameStack,
    degree_of_polarization,
    simulate_qwp_scan,
    stokes_direct,
    stokes_from_frames,
    uniform_qwp_angles,
)

from conftest import W0

RNG = np.random.default_rng(7)

TINY = default_grid(W0, 4)


def uniform_state(jones, grid=TINY):
    return VectorField(
        grid,
        np.full(grid.shape, jones[0], complex),
        np.full(grid.shape, jones[1], complex),
    )


def random_field(grid):
    h = RNG.normal(size=grid.shape) + 1j * RNG.normal(size=grid.shape)
    v = RNG.normal(size=grid.shape) + 1j * RNG.normal(size=grid.shape)
    return VectorField(grid, h, v)


class TestStokesDirect:
    def test_cardinal_states(self):
        cases = [
            (np.array([1.0, 0.0]), (1.0, 1.0, 0.0, 0.0)),
            (np.array([0.0, 1.0]), (1.0, -1.0, 0.0, 0.0)),
            (np.array([1.0, 1.0]) / np.sqrt(2), (1.0, 0.0, 1.0, 0.0)),
            (SIGMA_PLUS, (1.0, 0.0, 0.0, 1.0)),
            (SIGMA_MINUS, (1.0, 0.0, 0.0, -1.0)),
        ]
        for jones, expected in cases:
            s = stokes_direct(uniform_state(jones))
            got = (s.s0[0, 0], s.s1[0, 0], s.s2[0, 0], s.s3[0, 0])
            assert np.allclose(got, expected, atol=1e-12), jones

    def test_fully_polarized_identity(self, grid128):
        s = stokes_direct(random_field(grid128))
        assert np.allclose(
            s.s0**2, s.s1**2 + s.s2**2 + s.s3**2, rtol=1e-12
        )


class TestQwpScanSignal:
    def test_circular_input_signal(self):
        """sigma_plus behind QWP(theta) + H polarizer gives (1+sin 2theta)/2."""
        angles = uniform_qwp_angles(32)
        stack = simulate_qwp_scan(uniform_state(SIGMA_PLUS), angles)
        expected = 0.5 * (1.0 + np.sin(2.0 * angles))
        assert np.allclose(stack.frames[:, 0, 0], expected, atol=1e-12)

    def test_horizontal_input_signal(self):
        """H input gives the classic (2 + cos 4theta + ... ) / 4 curve."""
        angles = uniform_qwp_angles(32)
        stack = simulate_qwp_scan(uniform_state(np.array([1.0, 0.0])), angles)
        # s = (1, 1, 0, 0): I = (s0 + s1/2 + s1/2 cos 4t)/2 = (3 + cos 4t)/4
        expected = (3.0 + np.cos(4.0 * angles)) / 4.0
        assert np.allclose(stack.frames[:, 0, 0], expected, atol=1e-12)


class TestFrameStack:
    def test_too_few_angles(self):
        with pytest.raises(ValueError, match="5"):
            FrameStack(TINY, np.linspace(0, np.pi, 4, endpoint=False),
                       np.zeros((4, *TINY.shape)))

    def test_duplicate_angles(self):
        angles = np.array([0.0, 0.1, 0.1, 0.3, 0.4])
        with pytest.raises(ValueError, match="distinct"):
            FrameStack(TINY, angles, np.zeros((5, *TINY.shape)))

    def test_shape_mismatch(self):
        angles = uniform_qwp_angles(8)
        with pytest.raises(ValueError):
            FrameStack(TINY, angles, np.zeros((8, 3, 3)))


class TestReconstruction:
    def test_round_trip_random_fields(self):
        grid = default_grid(W0, 32)
        angles = uniform_qwp_angles(16)
        for _ in range(20):
            f = random_field(grid)
            direct = stokes_direct(f)
            rec = stokes_from_frames(simulate_qwp_scan(f, angles))
            scale = np.max(np.abs(direct.s0))
            for name in ("s0", "s1", "s2", "s3"):
                assert np.max(np.abs(getattr(rec, name) - getattr(direct, name))) < 1e-9 * scale

    @pytest.mark.parametrize("n", [5, 8, 16, 33])
    def test_any_uniform_count(self, n):
        grid = default_grid(W0, 16)
        f = random_field(grid)
        rec = stokes_from_frames(simulate_qwp_scan(f, uniform_qwp_angles(n)))
        direct = stokes_direct(f)
        scale = np.max(np.abs(direct.s0))
        assert np.max(np.abs(rec.s3 - direct.s3)) < 1e-9 * scale

    def test_global_angle_offset_is_compensated(self):
        # the projections use the actual angles, so a miscalibrated starting
        # angle of the QWP drops out of all four maps
        grid = default_grid(W0, 16)
        f = random_field(grid)
        base = stokes_from_frames(simulate_qwp_scan(f, uniform_qwp_angles(16)))
        shifted = stokes_from_frames(
            simulate_qwp_scan(f, uniform_qwp_angles(16, offset=0.31))
        )
        for name in ("s0", "s1", "s2", "s3"):
            assert np.allclose(
                getattr(shifted, name), getattr(base, name), atol=1e-9
            )

    def test_nonuniform_angles_rejected(self):
        grid = default_grid(W0, 8)
        f = random_field(grid)
        angles = uniform_qwp_angles(8)
        angles[3] += 1e-3
        stack = simulate_qwp_scan(f, angles)
        with pytest.raises(ValueError, match="uniform"):
            stokes_from_frames(stack)

    def test_constant_frames_mean_unpolarized(self):
        angles = uniform_qwp_angles(12)
        frames = np.full((12, *TINY.shape), 0.7)
        s = stokes_from_frames(FrameStack(TINY, angles, frames))
        assert np.allclose(s.s0, 1.4, atol=1e-12)
        for name in ("s1", "s2", "s3"):
            assert np.max(np.abs(getattr(s, name))) < 1e-12


class TestDegreeOfPolarization:
    def test_fully_polarized(self, grid128):
        from conftest import WAVELENGTH
        from vecbeam.fields import gaussian_mode

        g = gaussian_mode(W0, WAVELENGTH, grid128)
        f = VectorField(grid128, g.amps, 1j * g.amps)
        dop = degree_of_polarization(stokes_direct(f))
        assert np.allclose(dop.compressed(), 1.0, atol=1e-9)

    def test_dark_pixels_masked(self, grid128):
        h = np.zeros(grid128.shape, complex)
        h[0, 0] = 1.0
        dop = degree_of_polarization(
            stokes_direct(VectorField(grid128, h, np.zeros_like(h)))
        )
        assert dop.mask[5, 5]
        assert not dop.mask[0, 0]

    def test_mixed_state_between_zero_and_one(self):
        angles = uniform_qwp_angles(16)
        a = simulate_qwp_scan(uniform_state(np.array([1.0, 0.0])), angles)
        b = simulate_qwp_scan(uniform_state(np.array([0.0, 1.0])), angles)
        mixed = FrameStack(TINY, angles, a.frames + b.frames)
        dop = degree_of_polarization(stokes_from_frames(mixed))
        assert np.allclose(dop.compressed(), 0.0, atol=1e-9)
