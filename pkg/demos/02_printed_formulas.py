"""
Three closed forms that needed fixing
=====================================

The generic construction is the reference. Three frequently quoted closed
forms disagree with it, and each disagreement can be reproduced in a line.
"""

from induced_uncertainty import DivergenceSpec, MeasureId, closed_form, u_down, u_up
from induced_uncertainty.distributions import certain
from induced_uncertainty.errata import (
    collect_errata,
    printed_down_tsallis,
    printed_hellinger_uncertainty,
    printed_js_uncertainty,
)

# %%
# Jensen-Shannon. A measure of uncertainty has to vanish on a point mass,
# but the printed constant leaves 2 log2(n) behind.
c = certain(2, 0)
print("JS printed  :", printed_js_uncertainty(c))
print("JS direct   :", u_up(DivergenceSpec.jensen_shannon(), c))
print("JS corrected:", closed_form(MeasureId.jensen_shannon(), c))

# %%
# Hellinger. Evaluating the construction directly gives (2/sqrt(n))(sum sqrt(p) - 1),
# not 1 - sum p^2.
p = [0.75, 0.25]
print("Hellinger printed  :", printed_hellinger_uncertainty(p))
print("Hellinger direct   :", u_up(DivergenceSpec.hellinger(), p))

# %%
# Down-Tsallis. The printed form gives 1/(1 - beta) on a point mass.
beta = 0.5
print("down Tsallis printed  :", printed_down_tsallis(beta, certain(3, 0)))
print("down Tsallis direct   :", u_down(DivergenceSpec.tsallis(beta), certain(3, 0)))

# %%
# The full list, including the quantum ones, as ``verify --suite errata`` prints it
for e in collect_errata():
    print(e.describe())
