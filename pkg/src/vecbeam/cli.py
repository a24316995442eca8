"""The ``vecbeam`` command-line front end.

Grammar: ``vecbeam <command> [--config PATH] [--out DIR] [key=value ...]``.

Commands read their parameters from an INI-style config file
(``[section]`` headers with ``key = value`` lines) merged with
``section.key=value`` overrides from the command line; parameters that
belong to no section use the command's default section.  Exit codes:
0 success, 2 configuration error, 3 numerical precondition violation.

``VECBEAM_THREADS`` caps the numerical thread pools (exported to the BLAS/
FFT backends before they are loaded).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

__all__ = ["main", "ConfigError"]

SUPPORTED_P = 1
SUPPORTED_L = 3


class ConfigError(Exception):
    """Bad or missing configuration value."""


# ---------------------------------------------------------------------------
# configuration handling


def _load_config(path) -> dict[str, dict[str, str]]:
    import configparser

    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path) as fh:
            parser.read_file(fh, source=str(path))
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"config syntax error: {exc}") from exc
    return {section: dict(parser.items(section)) for section in parser.sections()}


def config_to_string(config: dict[str, dict[str, str]]) -> str:
    """Render a config dict back to INI text (parse/print idempotent)."""
    lines = []
    for section in config:
        lines.append(f"[{section}]")
        for key, value in config[section].items():
            lines.append(f"{key} = {value}")
        lines.append("")
    return "\n".join(lines)


def parse_config_string(text: str) -> dict[str, dict[str, str]]:
    import configparser

    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    parser.read_string(text)
    return {section: dict(parser.items(section)) for section in parser.sections()}


def _apply_overrides(config, overrides, default_section):
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not of the form key=value")
        key, value = item.split("=", 1)
        key = key.strip()
        if "." in key:
            section, key = key.split(".", 1)
        else:
            section = default_section
        config.setdefault(section, {})[key.strip()] = value.strip()
    return config


class Params:
    """Typed access to one config section with diagnostics naming the field."""

    def __init__(self, config, section):
        self.section = section
        self.values = config.get(section, {})

    def _fetch(self, key, cast, default):
        if key not in self.values:
            if default is _REQUIRED:
                raise ConfigError(f"missing required field '{self.section}.{key}'")
            return default
        raw = self.values[key]
        try:
            return cast(raw)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad value for '{self.section}.{key}': {raw!r}") from exc

    def get_float(self, key, default=None):
        return self._fetch(key, float, default)

    def get_int(self, key, default=None):
        return self._fetch(key, int, default)

    def get_str(self, key, default=None):
        return self._fetch(key, str, default)

    def get_bool(self, key, default=None):
        def cast(raw):
            lowered = raw.lower()
            if lowered in ("1", "true", "yes", "on"):
                return True
            if lowered in ("0", "false", "no", "off"):
                return False
            raise ValueError(raw)

        return self._fetch(key, cast, default)

    def get_floats(self, key, default=None):
        def cast(raw):
            return [float(x) for x in raw.replace(",", " ").split()]

        return self._fetch(key, cast, default)


class _Required:
    pass


_REQUIRED = _Required()


def _check_mode_indices(p, l, extended):
    if extended:
        return
    if p > SUPPORTED_P or abs(l) > SUPPORTED_L:
        raise ConfigError(
            f"mode (p={p}, l={l}) outside the supported range p <= {SUPPORTED_P}, "
            f"|l| <= {SUPPORTED_L}; pass --extended to override"
        )


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _build_grid(params):
    from .fields import default_grid

    n = params.get_int("n", 512)
    extent = params.get_float("extent_factor", 8.0)
    w0 = params.get_float("w0", 1e-3)
    return default_grid(w0, n, extent)


def _flavor(name):
    from .pipeline import Flavor

    try:
        return Flavor(name)
    except ValueError as exc:
        valid = ", ".join(f.value for f in Flavor)
        raise ConfigError(f"unknown flavor {name!r}; expected one of: {valid}") from exc


# ---------------------------------------------------------------------------
# commands


def cmd_mask(config, args):
    from .io import phase_to_pgm
    from .masks import quantize
    from .pipeline import VectorBeamPreset, preset_masks

    mode = Params(config, "mode")
    beam = Params(config, "beam")
    slm = Params(config, "slm")
    p = mode.get_int("p", _REQUIRED)
    l = mode.get_int("l", _REQUIRED)
    _check_mode_indices(p, l, args.extended)
    w0 = beam.get_float("w0", 1e-3)
    wavelength = beam.get_float("wavelength", 1.56e-6)
    kinoform_f = mode.get_float("kinoform_f", 0.0)
    levels = slm.get_int("levels", 0)
    flavor = _flavor(mode.get_str("flavor", "radial-like"))
    grid_params = Params(config, "grid")
    grid_params.values.setdefault("w0", str(w0))
    grid = _build_grid(grid_params)

    preset = VectorBeamPreset(p=p, l=l, flavor=flavor)
    mask_a, mask_b = preset_masks(
        preset, w0, grid, kinoform_f=kinoform_f, wavelength=wavelength
    )
    if levels:
        mask_a, mask_b = quantize(mask_a, levels), quantize(mask_b, levels)

    out = _out_dir(args)
    phase_to_pgm(out / "mask_a.pgm", mask_a)
    phase_to_pgm(out / "mask_b.pgm", mask_b)
    (out / "mask_meta.txt").write_text(
        f"p = {p}\nl = {l}\nflavor = {flavor.value}\nw0 = {w0!r}\n"
        f"wavelength = {wavelength!r}\nkinoform_f = {kinoform_f!r}\n"
        f"levels = {levels}\ngrid = {grid.nx} {grid.ny} {grid.dx!r} {grid.dy!r}\n"
    )
    print(f"wrote {out / 'mask_a.pgm'} and {out / 'mask_b.pgm'}")
    return 0


def _conversion_config(config, args):
    from .masks import quantize
    from .pipeline import ConversionConfig, VectorBeamPreset, preset_masks

    beam = Params(config, "beam")
    slm = Params(config, "slm")
    w0 = beam.get_float("w0", 1e-3)
    wavelength = beam.get_float("wavelength", 1.56e-6)
    eta_mod = slm.get_float("eta_mod", 1.0)
    levels = slm.get_int("levels", 0)
    distance = slm.get_float("inter_half_distance", 0.0)

    if "masks" in config:
        from .io import pgm_to_phase

        masks = Params(config, "masks")
        grid_params = Params(config, "grid")
        grid_params.values.setdefault("w0", str(w0))
        grid = _build_grid(grid_params)
        mask_paths = []
        for key in ("mask_a", "mask_b"):
            path = masks.get_str(key, _REQUIRED)
            if not Path(path).exists():
                raise ConfigError(f"field 'masks.{key}': file does not exist: {path}")
            mask_paths.append(path)
        mask_a = pgm_to_phase(mask_paths[0], grid.dx, grid.dy)
        mask_b = pgm_to_phase(mask_paths[1], grid.dx, grid.dy)
        if mask_a.grid != grid or mask_b.grid != grid:
            raise ConfigError("mask rasters do not match the configured grid size")
    else:
        mode = Params(config, "mode")
        p = mode.get_int("p", _REQUIRED)
        l = mode.get_int("l", _REQUIRED)
        _check_mode_indices(p, l, args.extended)
        flavor = _flavor(mode.get_str("flavor", "radial-like"))
        kinoform_f = mode.get_float("kinoform_f", 0.0)
        grid_params = Params(config, "grid")
        grid_params.values.setdefault("w0", str(w0))
        grid = _build_grid(grid_params)
        mask_a, mask_b = preset_masks(
            VectorBeamPreset(p=p, l=l, flavor=flavor),
            w0,
            grid,
            kinoform_f=kinoform_f,
            wavelength=wavelength,
        )
        if levels:
            mask_a, mask_b = quantize(mask_a, levels), quantize(mask_b, levels)

    return ConversionConfig(
        w0=w0,
        wavelength=wavelength,
        mask_a=mask_a,
        mask_b=mask_b,
        eta_mod=eta_mod,
        inter_half_distance=distance,
    )


def cmd_convert(config, args):
    import numpy as np

    from .io import write_intensity_pgm, write_vbf
    from .pipeline import convert

    cfg = _conversion_config(config, args)
    beam = convert(cfg)
    out = _out_dir(args)
    write_vbf(out / "field.vbf", beam)
    intensity = np.abs(beam.h) ** 2 + np.abs(beam.v) ** 2
    write_intensity_pgm(out / "intensity.pgm", intensity)
    print(f"wrote {out / 'field.vbf'} and {out / 'intensity.pgm'}")
    return 0


def _read_vector_field(params, key="field"):
    from .io import read_vbf
    from .jones import VectorField

    path = params.get_str(key, _REQUIRED)
    if not Path(path).exists():
        raise ConfigError(f"field '{params.section}.{key}': file does not exist: {path}")
    field = read_vbf(path)
    if not isinstance(field, VectorField):
        raise ConfigError(f"{path} holds a scalar field; a 2-component VBF1 file is needed")
    return field


def cmd_polarizer_scan(config, args):
    import numpy as np

    from .io import write_intensity_pgm
    from .pipeline import polarizer_image

    params = Params(config, "scan")
    field = _read_vector_field(params)
    angles_deg = params.get_floats("angles", [0.0, 45.0, 90.0, 135.0])
    out = _out_dir(args)
    for angle in angles_deg:
        image = polarizer_image(field, np.deg2rad(angle))
        write_intensity_pgm(out / f"polarizer_{angle:07.2f}.pgm", image)
    print(f"wrote {len(angles_deg)} polarizer images to {out}")
    return 0


def cmd_stokes_sim(config, args):
    import numpy as np

    from .fields import ScalarField
    from .io import write_manifest, write_vbf
    from .polarimetry import simulate_qwp_scan, uniform_qwp_angles

    params = Params(config, "scan")
    field = _read_vector_field(params)
    n = params.get_int("n_angles", 16)
    offset_deg = params.get_float("offset_deg", 0.0)
    if n < 5:
        raise ConfigError(f"scan.n_angles must be >= 5, got {n}")
    angles = uniform_qwp_angles(n, np.deg2rad(offset_deg))
    stack = simulate_qwp_scan(field, angles)
    out = _out_dir(args)
    frames_dir = out / "frames"
    frames_dir.mkdir(exist_ok=True)
    entries = []
    for k, (angle, frame) in enumerate(zip(stack.angles, stack.frames)):
        name = f"frame_{k:03d}.vbf"
        write_vbf(frames_dir / name, ScalarField(field.grid, frame.astype(complex)))
        entries.append((float(np.degrees(angle)), name))
    write_manifest(out / "manifest.txt", entries)
    print(f"wrote {n} frames to {frames_dir} with manifest {out / 'manifest.txt'}")
    return 0


def _load_frames(frames_dir, manifest_path):
    import numpy as np

    from .io import read_manifest, read_pgm, read_vbf
    from .polarimetry import FrameStack

    entries = read_manifest(manifest_path)
    if len(entries) < 5:
        raise ConfigError(
            f"manifest {manifest_path} lists {len(entries)} frames; at least 5 are needed"
        )
    frames = []
    grid = None
    for angle_deg, name in entries:
        path = Path(frames_dir) / name
        if not path.exists():
            raise ConfigError(f"manifest names a missing frame: {path}")
        if path.suffix == ".vbf":
            field = read_vbf(path)
            if grid is None:
                grid = field.grid
            elif field.grid != grid:
                raise ConfigError(f"frame {path} grid does not match the stack")
            frames.append(field.amps.real)
        else:
            values, _ = read_pgm(path)
            if grid is None:
                from .fields import GridSpec

                grid = GridSpec(nx=values.shape[1], ny=values.shape[0], dx=1.0, dy=1.0)
            elif values.shape != grid.shape:
                raise ConfigError(f"frame {path} shape does not match the stack")
            frames.append(values.astype(float))
    angles = np.deg2rad([angle for angle, _ in entries])
    return FrameStack(grid, angles, np.stack(frames))


def cmd_stokes_analyze(config, args):
    import numpy as np

    from .io import write_stokes_csv, write_stokes_vbf
    from .polarimetry import degree_of_polarization, stokes_from_frames

    params = Params(config, "analyze")
    frames_dir = params.get_str("frames", _REQUIRED)
    manifest = params.get_str("manifest", _REQUIRED)
    if not Path(manifest).exists():
        raise ConfigError(f"field 'analyze.manifest': file does not exist: {manifest}")
    stack = _load_frames(frames_dir, manifest)
    maps = stokes_from_frames(stack)
    out = _out_dir(args)
    write_stokes_vbf(out, maps)
    write_stokes_csv(out, maps)
    dop = degree_of_polarization(maps)
    total_s0 = maps.s0.sum()
    summary = (
        f"frames = {len(stack.angles)}\n"
        f"mean_degree_of_polarization = {float(dop.mean())!r}\n"
        f"s1_fraction = {float(maps.s1.sum() / total_s0)!r}\n"
        f"s2_fraction = {float(maps.s2.sum() / total_s0)!r}\n"
        f"s3_fraction = {float(maps.s3.sum() / total_s0)!r}\n"
        f"abs_s3_power_fraction = {float(np.abs(maps.s3).sum() / total_s0)!r}\n"
    )
    (out / "stokes_summary.txt").write_text(summary)
    print(summary, end="")
    return 0


def cmd_squeeze_budget(config, args):
    from .squeezing import budget

    params = Params(config, "squeezing")
    input_db = params.get_float("input_db", _REQUIRED)
    transmissions = params.get_floats("transmissions", [])
    uncertainty = params.get_float("uncertainty_db", None)
    report = budget(input_db, transmissions, uncertainty)

    header = f"{'stage':>5} {'transmission':>12} {'cumulative':>10} {'dB':>8}"
    lines = [header]
    csv_lines = ["stage,transmission,cumulative_transmission,db"]
    lines.append(f"{'in':>5} {'':>12} {'':>10} {report.input_db:8.3f}")
    csv_lines.append(f"0,1.0,1.0,{report.input_db!r}")
    for row in report.rows:
        lines.append(
            f"{row.stage:>5} {row.transmission:12.4f} "
            f"{row.cumulative_transmission:10.4f} {row.db:8.3f}"
        )
        csv_lines.append(
            f"{row.stage},{row.transmission!r},{row.cumulative_transmission!r},{row.db!r}"
        )
    lines.append(f"final squeezing: {report.final_db:.3f} dB "
                 f"(variance {report.final.variance:.4f} relative to shot noise)")
    text = "\n".join(lines) + "\n"
    out = _out_dir(args)
    (out / "budget.txt").write_text(text)
    (out / "budget.csv").write_text("\n".join(csv_lines) + "\n")
    print(text, end="")
    return 0


def cmd_report(config, args):
    import numpy as np

    from .io import write_intensity_pgm, write_stokes_csv, write_stokes_vbf, write_vbf
    from .pipeline import convert, polarizer_image
    from .polarimetry import stokes_direct
    from .squeezing import budget

    cfg = _conversion_config(config, args)
    beam = convert(cfg)
    out = _out_dir(args)
    write_vbf(out / "field.vbf", beam)
    intensity = np.abs(beam.h) ** 2 + np.abs(beam.v) ** 2
    write_intensity_pgm(out / "intensity.pgm", intensity)
    for angle in (0.0, 45.0, 90.0, 135.0):
        image = polarizer_image(beam, np.deg2rad(angle))
        write_intensity_pgm(out / f"polarizer_{angle:07.2f}.pgm", image)
    maps = stokes_direct(beam)
    write_stokes_vbf(out, maps)
    write_stokes_csv(out, maps)

    sq = Params(config, "squeezing")
    input_db = sq.get_float("input_db", -3.4)
    transmissions = sq.get_floats("transmissions", [0.36])
    report = budget(input_db, transmissions)
    summary = (
        f"input_squeezing_db = {input_db!r}\n"
        f"total_transmission = {float(np.prod(transmissions)) if transmissions else 1.0!r}\n"
        f"output_squeezing_db = {report.final_db!r}\n"
        f"s3_power_fraction = {float(np.abs(maps.s3).sum() / maps.s0.sum())!r}\n"
    )
    (out / "report_summary.txt").write_text(summary)
    print(summary, end="")
    return 0


_COMMANDS = {
    "mask": (cmd_mask, "mode"),
    "convert": (cmd_convert, "mode"),
    "polarizer-scan": (cmd_polarizer_scan, "scan"),
    "stokes-sim": (cmd_stokes_sim, "scan"),
    "stokes-analyze": (cmd_stokes_analyze, "analyze"),
    "squeeze-budget": (cmd_squeeze_budget, "squeezing"),
    "report": (cmd_report, "mode"),
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="vecbeam",
        description="Vector vortex beam simulation: masks, conversion, polarimetry, "
        "squeezing budgets.",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", help="INI-style config file")
    parser.add_argument("--out", default=".", help="output directory (default: .)")
    parser.add_argument(
        "--extended", action="store_true",
        help="allow mode indices beyond p <= 1, |l| <= 3",
    )
    parser.add_argument(
        "overrides", nargs="*", metavar="key=value",
        help="config overrides, optionally section-qualified (section.key=value)",
    )
    return parser


def main(argv=None) -> int:
    threads = os.environ.get("VECBEAM_THREADS")
    if threads:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ.setdefault(var, threads)

    args = _build_parser().parse_intermixed_args(argv)
    handler, default_section = _COMMANDS[args.command]
    try:
        config = _load_config(args.config) if args.config else {}
        _apply_overrides(config, args.overrides, default_section)
        return handler(config, args)
    except ConfigError as exc:
        print(f"vecbeam: config error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"vecbeam: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
