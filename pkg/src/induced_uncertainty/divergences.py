"""Classical divergences between finite distributions, in bits.

Conventions shared by every family:

* terms with ``p_i = 0`` contribute nothing (``0 log 0 = 0``, ``0**a = 0``);
* mass of ``p`` on a zero of ``q`` gives ``+inf`` whenever the family
  diverges there; infinity is returned as ``float('inf')``, never raised.

Each named function validates its inputs and returns a Python float. The
``*_array`` helpers skip validation and broadcast over the last axis, which
is what the property suites use for speed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .distributions import DistributionLike, as_distribution
from .exceptions import (
    DimensionMismatchError,
    GeneratorNotNormalizedError,
    NegativeOrderError,
    UncertaintyError,
)

LN2 = math.log(2.0)
GENERATOR_TOL = 1e-12


class Family(enum.Enum):
    KL = "kl"
    RENYI = "renyi"
    JENSEN_SHANNON = "js"
    TSALLIS = "tsallis"
    HELLINGER = "hellinger"
    TOTAL_VARIATION = "tv"
    GENERIC_F = "f"


@dataclass(frozen=True)
class ConvexGenerator:
    """Convex ``f`` with ``f(1) = 0`` plus its slope at infinity.

    ``func`` must accept numpy arrays and be finite at 0. ``slope_at_infinity``
    is ``lim f(t)/t`` as ``t -> inf``; it prices mass of ``p`` where ``q = 0``.
    """

    func: Callable[[np.ndarray], np.ndarray]
    slope_at_infinity: float = math.inf
    name: str = "f"

    def __post_init__(self):
        f1 = float(np.asarray(self.func(np.array([1.0])))[0])
        if not abs(f1) <= GENERATOR_TOL:
            raise GeneratorNotNormalizedError(f"generator {self.name!r} has f(1) = {f1!r}")

    def __call__(self, t):
        return self.func(t)


def _xlog2x(t):
    t = np.asarray(t, dtype=np.float64)
    safe = np.where(t > 0, t, 1.0)
    return np.where(t > 0, t * np.log2(safe), 0.0)


KL_GENERATOR = ConvexGenerator(_xlog2x, math.inf, "t*log2(t)")
TV_GENERATOR = ConvexGenerator(lambda t: 0.5 * np.abs(np.asarray(t) - 1.0), 0.5, "|t-1|/2")
HELLINGER_GENERATOR = ConvexGenerator(
    lambda t: (np.sqrt(np.asarray(t)) - 1.0) ** 2, 1.0, "(sqrt(t)-1)^2")
JS_GENERATOR = ConvexGenerator(
    lambda t: _xlog2x(t) - _xlog2x(1.0 + np.asarray(t)) + (1.0 + np.asarray(t)),
    1.0,
    "t*log2(t) - (1+t)*log2((1+t)/2)",
)


def tsallis_generator(beta: float) -> ConvexGenerator:
    """``(t**beta - 1)/(beta - 1)``; convex for beta > 0."""
    if beta == 1:
        return KL_GENERATOR
    slope = math.inf if beta > 1 else 0.0
    return ConvexGenerator(
        lambda t: (np.asarray(t, dtype=np.float64) ** beta - 1.0) / (beta - 1.0),
        slope,
        f"tsallis({beta})",
    )


@dataclass(frozen=True)
class DivergenceSpec:
    """Selects a divergence family and its order parameter."""

    family: Family
    alpha: Optional[float] = None
    beta: Optional[float] = None
    f: Optional[ConvexGenerator] = field(default=None, compare=False)

    def __post_init__(self):
        fam = self.family
        if fam is Family.RENYI:
            if self.alpha is None or math.isnan(self.alpha):
                raise UncertaintyError("Renyi divergence needs alpha")
            if self.alpha < 0:
                raise NegativeOrderError(f"Renyi order must be >= 0, got {self.alpha}")
        elif fam is Family.TSALLIS:
            if self.beta is None or not math.isfinite(self.beta):
                raise UncertaintyError("Tsallis divergence needs a finite real beta")
        elif fam is Family.GENERIC_F:
            if self.f is None:
                raise UncertaintyError("generic f-divergence needs a generator")

    @classmethod
    def kl(cls):
        return cls(Family.KL)

    @classmethod
    def renyi(cls, alpha: float):
        return cls(Family.RENYI, alpha=float(alpha))

    @classmethod
    def jensen_shannon(cls):
        return cls(Family.JENSEN_SHANNON)

    @classmethod
    def tsallis(cls, beta: float):
        return cls(Family.TSALLIS, beta=float(beta))

    @classmethod
    def hellinger(cls):
        return cls(Family.HELLINGER)

    @classmethod
    def total_variation(cls):
        return cls(Family.TOTAL_VARIATION)

    @classmethod
    def generic(cls, f: ConvexGenerator):
        return cls(Family.GENERIC_F, f=f)

    @property
    def symmetric(self) -> bool:
        if self.family is Family.RENYI:
            return self.alpha == 0.5
        return self.family in (Family.JENSEN_SHANNON, Family.HELLINGER, Family.TOTAL_VARIATION)

    def label(self) -> str:
        if self.family is Family.RENYI:
            return f"renyi(alpha={self.alpha:g})"
        if self.family is Family.TSALLIS:
            return f"tsallis(beta={self.beta:g})"
        if self.family is Family.GENERIC_F:
            return f"f[{self.f.name}]"
        return self.family.value


# -- array kernels (no validation, broadcast over the last axis) ------------

def _power_sum(p, q, a):
    """sum over p > 0 of p**a * q**(1 - a)."""
    pos = p > 0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        terms = np.where(pos, np.where(pos, p, 1.0) ** a * q ** (1.0 - a), 0.0)
    return terms.sum(axis=-1)


def kl_array(p, q):
    pos = p > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(pos, p, 1.0) / q
        terms = np.where(pos, p * np.log2(ratio), 0.0)
    return terms.sum(axis=-1)


def renyi_array(alpha, p, q):
    if alpha == 1:
        return kl_array(p, q)
    if math.isinf(alpha):
        pos = p > 0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(pos, np.where(pos, p, 1.0) / q, 0.0)
        return np.log2(ratio.max(axis=-1))
    s = _power_sum(p, q, alpha)
    with np.errstate(divide="ignore"):
        return np.log2(s) / (alpha - 1.0)


def jensen_shannon_array(p, q):
    m = 0.5 * (p + q)
    return kl_array(p, m) + kl_array(q, m)


def tsallis_array(beta, p, q):
    if beta == 1:
        return kl_array(p, q)
    return (_power_sum(p, q, beta) - 1.0) / (beta - 1.0)


def hellinger_array(p, q):
    return ((np.sqrt(p) - np.sqrt(q)) ** 2).sum(axis=-1)


def total_variation_array(p, q):
    return 0.5 * np.abs(p - q).sum(axis=-1)


def f_divergence_array(f: ConvexGenerator, p, q):
    qpos = q > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(qpos, p / np.where(qpos, q, 1.0), 0.0)
        body = np.where(qpos, q * f(t), 0.0)
        # mass of p on zeros of q is priced at the slope at infinity
        tail = np.where(~qpos & (p > 0), p * f.slope_at_infinity, 0.0)
    return (body + tail).sum(axis=-1)


def divergence_array(spec: DivergenceSpec, p, q):
    """Evaluate ``spec`` on stacked distributions without validation."""
    fam = spec.family
    if fam is Family.KL:
        return kl_array(p, q)
    if fam is Family.RENYI:
        return renyi_array(spec.alpha, p, q)
    if fam is Family.JENSEN_SHANNON:
        return jensen_shannon_array(p, q)
    if fam is Family.TSALLIS:
        return tsallis_array(spec.beta, p, q)
    if fam is Family.HELLINGER:
        return hellinger_array(p, q)
    if fam is Family.TOTAL_VARIATION:
        return total_variation_array(p, q)
    return f_divergence_array(spec.f, p, q)


# -- validated public API ----------------------------------------------------

def _pair(p: DistributionLike, q: DistributionLike):
    p, q = as_distribution(p), as_distribution(q)
    if p.n != q.n:
        raise DimensionMismatchError(f"dimensions differ: {p.n} vs {q.n}")
    return p.probs, q.probs


def _value(x) -> float:
    x = float(x)
    if math.isnan(x):
        raise UncertaintyError("divergence evaluated to NaN")
    return x + 0.0


def kl(p: DistributionLike, q: DistributionLike) -> float:
    """Kullback-Leibler divergence ``sum p log2(p/q)``."""
    return _value(kl_array(*_pair(p, q)))


def renyi(alpha: float, p: DistributionLike, q: DistributionLike) -> float:
    """Renyi divergence of order ``alpha >= 0`` (1 and inf by their limits).

    Order 0 gives ``-log2 q(supp p)``.
    """
    if alpha < 0:
        raise NegativeOrderError(f"Renyi order must be >= 0, got {alpha}")
    return _value(renyi_array(float(alpha), *_pair(p, q)))


def jensen_shannon(p: DistributionLike, q: DistributionLike) -> float:
    """``KL(p||m) + KL(q||m)`` with ``m`` the midpoint; no 1/2 prefactor, so the range is [0, 2]."""
    return _value(jensen_shannon_array(*_pair(p, q)))


def tsallis(beta: float, p: DistributionLike, q: DistributionLike) -> float:
    """Tsallis divergence ``(sum p**b q**(1-b) - 1)/(b - 1)``; beta = 1 gives KL in bits."""
    return _value(tsallis_array(float(beta), *_pair(p, q)))


def hellinger(p: DistributionLike, q: DistributionLike) -> float:
    """``sum (sqrt p - sqrt q)**2``, in [0, 2]."""
    return _value(hellinger_array(*_pair(p, q)))


def total_variation(p: DistributionLike, q: DistributionLike) -> float:
    return _value(total_variation_array(*_pair(p, q)))


def f_divergence(f: ConvexGenerator, p: DistributionLike, q: DistributionLike) -> float:
    """``sum q f(p/q)``, completed with ``f.slope_at_infinity`` on zeros of ``q``."""
    if not isinstance(f, ConvexGenerator):
        f = ConvexGenerator(f)
    return _value(f_divergence_array(f, *_pair(p, q)))


def divergence(spec: DivergenceSpec, p: DistributionLike, q: DistributionLike) -> float:
    return _value(divergence_array(spec, *_pair(p, q)))
