"""End-to-end acceptance checks.

Every test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
captured output of failing tests) and then asserts, so the suite doubles as
a short verification report.
"""

import time

import numpy as np
import pytest

from vecbeam.analysis import spiral_displacement, target_power_fraction
from vecbeam.fields import (
    LGModeSpec,
    default_grid,
    gaussian_mode,
    inner_product,
    lg_mode,
)
from vecbeam.jones import VectorField, waveplate
from vecbeam.masks import combine, kinoform_lens
from vecbeam.pipeline import (
    ConversionConfig,
    VectorBeamPreset,
    convert,
    polarizer_image,
    preset_config,
    preset_masks,
)
from vecbeam.polarimetry import (
    simulate_qwp_scan,
    stokes_direct,
    stokes_from_frames,
    uniform_qwp_angles,
)
from vecbeam.propagation import angular_spectrum, propagate_vector
from vecbeam.squeezing import SqueezingState, apply_loss

from conftest import RAYLEIGH, W0, WAVELENGTH

ALL_PRESETS = [(p, l) for p in (0, 1) for l in (1, 2, 3)]


def verdict(ok, name, detail):
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return ok


def test_criterion_1_squeezing_budget():
    out = apply_loss(SqueezingState.from_db(-3.4), 0.36)
    ok = -1.0 <= out.db <= -0.8
    assert verdict(
        ok, "criterion 1 (loss budget)",
        f"-3.4 dB through t=0.36 -> {out.db:.4f} dB, required within [-1.0, -0.8]",
    )


def test_criterion_2_ideal_radial_beam():
    start = time.perf_counter()
    grid = default_grid(W0, 512)
    cfg = preset_config(VectorBeamPreset(0, 1), W0, WAVELENGTH, grid)
    beam = convert(cfg)
    fraction = target_power_fraction(beam, 1)
    s = stokes_direct(beam)
    s3_fraction = np.abs(s.s3).sum() / s.s0.sum()
    elapsed = time.perf_counter() - start
    ok = fraction >= 0.99 and s3_fraction < 1e-6 and elapsed < 10.0
    assert verdict(
        ok, "criterion 2 (ideal radial beam)",
        f"target channel fraction {fraction:.6f} (>= 0.99), "
        f"S3 power fraction {s3_fraction:.2e} (< 1e-6), {elapsed:.1f} s (< 10 s)",
    )


def test_criterion_3_all_preset_modes():
    start = time.perf_counter()
    grid = default_grid(W0, 512)
    fractions, harmonics = {}, {}
    for p, l in ALL_PRESETS:
        beam = convert(preset_config(VectorBeamPreset(p, l), W0, WAVELENGTH, grid))
        fractions[(p, l)] = target_power_fraction(beam, l)
        s = stokes_direct(beam)
        # the polarization texture lives on the whole Gaussian envelope;
        # probe it on a bright ring at the waist radius
        ring = W0
        from vecbeam.analysis import dominant_ring_harmonic

        harmonics[(p, l)] = tuple(
            dominant_ring_harmonic(raster, grid, ring) for raster in (s.s1, s.s2)
        )
    elapsed = time.perf_counter() - start

    frac_ok = all(v >= 0.99 for v in fractions.values())
    harm_ok = all(
        order == 2 * l and dominance >= 10.0
        for (p, l), pair in harmonics.items()
        for order, dominance in pair
    )
    ok = frac_ok and harm_ok and elapsed < 120.0
    worst = min(fractions.values())
    weakest = min(d for pair in harmonics.values() for _, d in pair)
    assert verdict(
        ok, "criterion 3 (all six modes)",
        f"channel fractions all >= 0.99 (min {worst:.6f}), s1/s2 ring harmonic "
        f"2l dominant with >= 10x power (min dominance {weakest:.1f}x), "
        f"{elapsed:.1f} s (< 120 s)",
    )


def test_criterion_4_stokes_round_trip():
    start = time.perf_counter()
    angles = uniform_qwp_angles(16)
    rng = np.random.default_rng(2026)
    worst = 0.0

    small = default_grid(W0, 32)
    for _ in range(100):
        h = rng.normal(size=small.shape) + 1j * rng.normal(size=small.shape)
        v = rng.normal(size=small.shape) + 1j * rng.normal(size=small.shape)
        f = VectorField(small, h, v)
        direct = stokes_direct(f)
        rec = stokes_from_frames(simulate_qwp_scan(f, angles))
        scale = np.max(np.abs(direct.s0))
        for name in ("s0", "s1", "s2", "s3"):
            err = np.max(np.abs(getattr(rec, name) - getattr(direct, name))) / scale
            worst = max(worst, err)

    grid = default_grid(W0, 128)
    for p, l in ALL_PRESETS:
        f = convert(preset_config(VectorBeamPreset(p, l), W0, WAVELENGTH, grid))
        direct = stokes_direct(f)
        rec = stokes_from_frames(simulate_qwp_scan(f, angles))
        scale = np.max(np.abs(direct.s0))
        for name in ("s0", "s1", "s2", "s3"):
            err = np.max(np.abs(getattr(rec, name) - getattr(direct, name))) / scale
            worst = max(worst, err)
    elapsed = time.perf_counter() - start

    ok = worst < 1e-9 and elapsed < 60.0
    assert verdict(
        ok, "criterion 4 (Stokes round trip)",
        f"100 random fields + 6 presets, N=16: worst relative error {worst:.2e} "
        f"(< 1e-9), {elapsed:.1f} s (< 60 s)",
    )


def test_criterion_5_zeroth_order_spirals():
    start = time.perf_counter()
    grid = default_grid(W0, 512, extent_factor=12.0)
    d = 0.2 * RAYLEIGH
    # the second mask carries a kinoform compensating the wavefront curvature
    # picked up over the inter-half propagation
    curvature = d * (1.0 + (RAYLEIGH / d) ** 2)
    camera_z = RAYLEIGH
    w_cam = W0 * np.sqrt(2.0)
    displacements = {}
    for eta in (1.0, 0.8):
        mask_a, mask_b = preset_masks(VectorBeamPreset(0, 2), W0, grid)
        mask_b = combine([mask_b, kinoform_lens(curvature, WAVELENGTH, grid)])
        cfg = ConversionConfig(
            w0=W0, wavelength=WAVELENGTH, mask_a=mask_a, mask_b=mask_b,
            eta_mod=eta, inter_half_distance=d,
        )
        beam = propagate_vector(convert(cfg), camera_z, WAVELENGTH)
        image = polarizer_image(beam, 0.0)
        displacements[eta] = np.degrees(
            spiral_displacement(image, grid, 0.55 * w_cam, 1.45 * w_cam)
        )
    elapsed = time.perf_counter() - start

    ok = displacements[0.8] > 5.0 and displacements[1.0] < 0.5 and elapsed < 30.0
    assert verdict(
        ok, "criterion 5 (zeroth-order spirals)",
        f"differential lobe rotation {displacements[0.8]:.2f} deg at eta=0.8 "
        f"(> 5 deg) vs {displacements[1.0]:.2f} deg at eta=1 (< 0.5 deg), "
        f"{elapsed:.1f} s (< 30 s)",
    )


def test_criterion_6_numerical_infrastructure():
    start = time.perf_counter()
    grid = default_grid(W0, 512)

    # LG orthonormality
    modes = [
        lg_mode(LGModeSpec(p, l, W0, WAVELENGTH), grid)
        for p in (0, 1)
        for l in range(-3, 4)
    ]
    gram = np.array([[inner_product(a, b) for b in modes] for a in modes])
    ortho_dev = np.max(np.abs(gram - np.eye(len(modes))))

    # propagation self-consistency
    wide = default_grid(W0, 512, extent_factor=16.0)
    g = gaussian_mode(W0, WAVELENGTH, wide)
    z1, z2 = 0.3 * RAYLEIGH, 0.5 * RAYLEIGH
    once = angular_spectrum(g, z1 + z2, WAVELENGTH)
    twice = angular_spectrum(angular_spectrum(g, z1, WAVELENGTH), z2, WAVELENGTH)
    scale = np.max(np.abs(once.amps))
    comp_dev = np.max(np.abs(once.amps - twice.amps)) / scale
    back = angular_spectrum(angular_spectrum(g, z1, WAVELENGTH), -z1, WAVELENGTH)
    rev_dev = np.max(np.abs(back.amps - g.amps)) / np.max(np.abs(g.amps))

    out = angular_spectrum(g, RAYLEIGH, WAVELENGTH)
    x, y = wide.meshgrid()
    intensity = np.abs(out.amps) ** 2
    width = np.sqrt(2.0 * np.sum((x**2 + y**2) * intensity) / np.sum(intensity))
    width_err = abs(width / (W0 * np.sqrt(2.0)) - 1.0)

    # wave-plate unitarity
    rng = np.random.default_rng(8)
    unit_dev = 0.0
    for _ in range(1000):
        m = waveplate(rng.uniform(0, 2 * np.pi), rng.uniform(0, np.pi)).as_array()
        unit_dev = max(unit_dev, np.max(np.abs(m.conj().T @ m - np.eye(2))))

    # loss-model composition
    loss_dev = 0.0
    for _ in range(1000):
        v = rng.uniform(0.05, 5.0)
        t1, t2 = rng.uniform(0.0, 1.0, size=2)
        stepwise = apply_loss(apply_loss(SqueezingState(v), t1), t2).variance
        direct = apply_loss(SqueezingState(v), t1 * t2).variance
        loss_dev = max(loss_dev, abs(stepwise - direct))
    elapsed = time.perf_counter() - start

    ok = (
        ortho_dev < 1e-6
        and comp_dev < 1e-6
        and rev_dev < 1e-6
        and width_err < 1e-3
        and unit_dev < 1e-12
        and loss_dev < 1e-12
        and elapsed < 120.0
    )
    assert verdict(
        ok, "criterion 6 (numerical infrastructure)",
        f"orthonormality {ortho_dev:.2e} (< 1e-6), composition {comp_dev:.2e}, "
        f"reversibility {rev_dev:.2e}, Gaussian w(z) error {width_err:.2e} "
        f"(< 1e-3), unitarity {unit_dev:.2e} (< 1e-12), loss composition "
        f"{loss_dev:.2e} (< 1e-12), {elapsed:.1f} s (< 120 s)",
    )


def test_criterion_7_declared_out_of_scope():
    declaration = (
        "not reproduced numerically (physical-apparatus outcomes): the measured "
        "-3.4 dB fiber-loop squeezing generation, the 10 MHz sideband spectra, "
        "and camera-specific lobe imbalances; only their model-level "
        "counterparts are simulated"
    )
    assert verdict(True, "criterion 7 (declared out of scope)", declaration)
