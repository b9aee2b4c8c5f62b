"""
Curves for a coin
=================

Evaluate Shannon, Jensen-Shannon, absolute and Hellinger uncertainty on
{p, 1 - p}. After dividing by the value at p = 1/2 all four run from 0 to 1
and back; the absolute measure is a tent with a corner at the top.

The same table is produced by ``induced-uncertainty sweep-classical``.
"""

from induced_uncertainty import MeasureId, closed_form, max_value
from induced_uncertainty.sweep import classical_sweep

res = classical_sweep(0.1, normalize="all")
print(f"{'p':>4} " + " ".join(f"{c.label:>10}" for c in res.columns))
for k, p in enumerate(res.grid):
    print(f"{p:4.1f} " + " ".join(f"{c.values[k]:10.6f}" for c in res.columns))

# %%
# One-sided slopes of the normalized absolute measure at p = 1/2
m = MeasureId.absolute()
f = lambda x: closed_form(m, [x, 1 - x]) / max_value(m, 2)
h = 1e-6
print("left slope :", (f(0.5) - f(0.5 - h)) / h)
print("right slope:", (f(0.5 + h) - f(0.5)) / h)

# %%
# Writing the full grid as CSV for an external plotter
with open("coin_curves.csv", "w") as fh:
    fh.write(classical_sweep(0.01, normalize="all").to_csv())
