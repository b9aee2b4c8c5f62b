"""
Uncertainty measures from divergences
=====================================

Take a divergence D and compare two distances to the uniform distribution U:
the distance of a point mass C, and the distance of p. The gap

    U(p) = D(C || U) - D(p || U)

is zero at point masses and largest at U. With the Kullback-Leibler
divergence it is the Shannon entropy.
"""

import math

import numpy as np

from induced_uncertainty import DivergenceSpec, MeasureId, closed_form, u_down, u_up

p = [0.75, 0.25]

# Kullback-Leibler gives back Shannon entropy, in bits
print("KL construction :", u_up(DivergenceSpec.kl(), p))
print("Shannon entropy :", closed_form(MeasureId.shannon(), p))

# Renyi divergences give Renyi entropies, with order 1/2 giving the
# Bhattacharyya measure 2 log2 sum sqrt(p)
for alpha in (0.5, 2.0, math.inf):
    print(f"Renyi alpha={alpha:<4}:", u_up(DivergenceSpec.renyi(alpha), p))

# %%
# Swapping the arguments, U(p) = D(U || C) - D(U || p), only works when
# D(U || C) is finite. For Renyi that needs an order strictly between 0 and 1.
print("down Renyi(0.5) :", u_down(DivergenceSpec.renyi(0.5), p))
print("closed form     :", closed_form(MeasureId.down_renyi(0.5), p))

try:
    u_down(DivergenceSpec.renyi(2.0), p)
except ValueError as exc:
    print("order 2 rejected:", exc)

# %%
# The new measures from this construction: Jensen-Shannon, Tsallis, Hellinger
# and total variation (the "absolute" measure). Each closed form agrees with
# the construction it came from.
rng = np.random.default_rng(0)
q = rng.dirichlet(np.ones(4))
for m in (MeasureId.jensen_shannon(), MeasureId.tsallis(2.0), MeasureId.hellinger(),
          MeasureId.absolute()):
    spec, _ = m.generator
    print(f"{m.label():<14} closed={closed_form(m, q):.12f} construction={u_up(spec, q):.12f}")
