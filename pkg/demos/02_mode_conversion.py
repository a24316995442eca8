"""Double-reflection conversion of a Gaussian into a radial vector beam.

Shows the two SLM half masks, the converted intensity, and the polarizer
projections whose rotating two-lobe pattern is the classic signature of
radial polarization.

Run: python3 demos/02_mode_conversion.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from vecbeam import (
    VectorBeamPreset,
    convert,
    default_grid,
    polarizer_image,
    preset_config,
    preset_masks,
)

w0 = 1e-3
wavelength = 1.56e-6
grid = default_grid(w0, 256)
preset = VectorBeamPreset(p=0, l=1)

mask_a, mask_b = preset_masks(preset, w0, grid)
beam = convert(preset_config(preset, w0, wavelength, grid))
intensity = np.abs(beam.h) ** 2 + np.abs(beam.v) ** 2

fig, axes = plt.subplots(2, 4, figsize=(14, 7))
axes[0, 0].imshow(mask_a.phase, cmap="gray")
axes[0, 0].set_title("SLM half A (charge +1)")
axes[0, 1].imshow(mask_b.phase, cmap="gray")
axes[0, 1].set_title("SLM half B (charge -1)")
axes[0, 2].imshow(intensity, cmap="inferno")
axes[0, 2].set_title("converted beam")
axes[0, 3].axis("off")

for ax, deg in zip(axes[1], (0, 45, 90, 135)):
    ax.imshow(polarizer_image(beam, np.deg2rad(deg)), cmap="inferno")
    ax.set_title(f"polarizer at {deg} deg")
for ax in axes.flat:
    ax.set_xticks([])
    ax.set_yticks([])
fig.tight_layout()
out = pathlib.Path(__file__).with_name("mode_conversion.png")
fig.savefig(out, dpi=110)
print(f"wrote {out}")
