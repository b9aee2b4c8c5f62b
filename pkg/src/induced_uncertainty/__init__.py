"""Uncertainty measures induced by statistical divergences.

A divergence ``D`` yields an uncertainty measure on finite distributions by
comparing the distance of ``p`` to the uniform distribution with that of a
certain (point-mass) distribution. The same idea applied to density
matrices gives measures of mixedness.
"""

from .distributions import (
    ProbabilityDistribution,
    certain,
    majorizes,
    make_distribution,
    random_distribution,
    random_majorized_pair,
    uniform,
)
from .divergences import (
    ConvexGenerator,
    DivergenceSpec,
    Family,
    f_divergence,
    hellinger,
    jensen_shannon,
    kl,
    renyi,
    total_variation,
    tsallis,
)
from .exceptions import UncertaintyError
from .quantum import (
    DensityMatrix,
    QDistanceSpec,
    QFamily,
    eigen_hermitian,
    induced_quantum_uncertainty,
    make_density_matrix,
    matrix_sqrt,
    quantum_closed_form,
    quantum_distance,
    random_density_matrix,
)
from .uncertainty import (
    Direction,
    MeasureId,
    MeasureKind,
    closed_form,
    max_value,
    u_down,
    u_up,
)

__version__ = "0.1.0"
