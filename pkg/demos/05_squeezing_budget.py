"""Loss budget for squeezed light sent through the conversion setup.

Starting from -3.4 dB of amplitude squeezing, the optical losses of the
mode-conversion path (64 % in total, i.e. transmission 0.36) degrade the
measurable squeezing to about -0.94 dB.  The plot shows the output
squeezing as a function of total transmission.

Run: python3 demos/05_squeezing_budget.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from vecbeam import SqueezingState, apply_loss, budget, loss_for_target

input_db = -3.4

report = budget(input_db, [0.9, 0.8, 0.5])
print(f"input: {input_db} dB")
for row in report.rows:
    print(f"  after stage {row.stage} (t = {row.transmission}): {row.db:+.3f} dB")
print(f"final: {report.final_db:+.3f} dB")

t_for_09 = loss_for_target(input_db, -0.9)
print(f"transmission that lands exactly at -0.9 dB: {t_for_09:.4f}")

transmissions = np.linspace(0.0, 1.0, 400)
output_db = [
    apply_loss(SqueezingState.from_db(input_db), t).db for t in transmissions
]

fig, ax = plt.subplots(figsize=(7, 5))
ax.plot(transmissions, output_db)
ax.axvline(0.36, color="gray", ls="--", label="setup transmission 0.36")
ax.axhline(-0.9, color="tab:red", ls=":", label="-0.9 dB")
ax.set_xlabel("total power transmission")
ax.set_ylabel("output squeezing (dB)")
ax.set_title(f"{input_db} dB input through a lossy path")
ax.legend()
ax.grid(alpha=0.3)
fig.tight_layout()
out = pathlib.Path(__file__).with_name("squeezing_budget.png")
fig.savefig(out, dpi=110)
print(f"wrote {out}")
