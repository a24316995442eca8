"""Gallery of Laguerre-Gaussian modes: intensity and phase at the waist.

Run: python3 demos/01_lg_modes.py  (writes lg_modes.png next to this file)
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from vecbeam import LGModeSpec, default_grid, lg_mode

w0 = 1e-3
wavelength = 1.56e-6
grid = default_grid(w0, 256, extent_factor=8.0)
extent_mm = [1e3 * grid.x_coords()[0], 1e3 * grid.x_coords()[-1]] * 2

cases = [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3)]
fig, axes = plt.subplots(2, len(cases), figsize=(3 * len(cases), 6))
for col, (p, l) in enumerate(cases):
    f = lg_mode(LGModeSpec(p, l, w0, wavelength), grid)
    axes[0, col].imshow(np.abs(f.amps) ** 2, extent=extent_mm, cmap="inferno")
    axes[0, col].set_title(f"LG({p},{l}) intensity")
    axes[1, col].imshow(np.angle(f.amps), extent=extent_mm, cmap="twilight")
    axes[1, col].set_title("phase")
for ax in axes.flat:
    ax.set_xlabel("x (mm)")
    ax.set_ylabel("y (mm)")
fig.tight_layout()
out = pathlib.Path(__file__).with_name("lg_modes.png")
fig.savefig(out, dpi=110)
print(f"wrote {out}")
