"""
Checking that a measure is valid
================================

A valid uncertainty measure is non-negative, zero exactly on point masses and
Schur-concave: spreading probability out never lowers it. The property
checks draw random majorized pairs and report every violation, so a broken
measure shows up right away.
"""

from induced_uncertainty import MeasureId
from induced_uncertainty.verify import (
    check_eigen_solver,
    check_faithfulness,
    check_oracle_equivalence,
    check_schur_concavity,
)

print(check_schur_concavity(MeasureId.absolute(), 3, 10_000, seed=1))
print(check_faithfulness(MeasureId.tsallis(2.0), 5, 1_000, seed=2))
print(check_oracle_equivalence(MeasureId.hellinger(), 4, 1_000, seed=3))


# %%
# The largest probability is Schur-convex, the opposite of what we want
def largest_first(p):
    return p[0]


print(check_schur_concavity(largest_first, 3, 1_000, seed=4).to_text(max_failures=3))

# %%
# The Jacobi eigen-solver behind every quantum measure
print(check_eigen_solver(200, seed=5))
