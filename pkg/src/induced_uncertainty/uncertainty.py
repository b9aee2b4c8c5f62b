"""Uncertainty measures induced by divergences.

Two constructions turn a divergence ``D`` into an uncertainty measure on the
n-simplex. With ``C`` a certain distribution and ``U`` the uniform one::

    up:   D(C || U) - D(p || U)
    down: D(U || C) - D(U || p)

:func:`u_up` and :func:`u_down` evaluate these literally and serve as the
ground truth. :func:`closed_form` gives the simplified expression for each
named measure; the test suite holds the two in agreement.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .distributions import DistributionLike, as_distribution, certain, uniform
from .divergences import DivergenceSpec, Family, divergence_array
from .exceptions import InfiniteReferenceError, UncertaintyError, UnsupportedOrderError

SUPPORT_TOL = 1e-12


class Direction(enum.Enum):
    UP = "up"
    DOWN = "down"


class MeasureKind(enum.Enum):
    SHANNON = "shannon"
    RENYI = "renyi"
    HARTLEY = "hartley"
    BHATTACHARYYA = "bhattacharyya"
    MIN_ENTROPY = "min-entropy"
    DOWN_RENYI = "down-renyi"
    JENSEN_SHANNON = "js"
    TSALLIS = "tsallis"
    DOWN_TSALLIS = "down-tsallis"
    HELLINGER = "hellinger"
    ABSOLUTE = "absolute"


_PARAMETRIC = {MeasureKind.RENYI, MeasureKind.DOWN_RENYI, MeasureKind.TSALLIS,
               MeasureKind.DOWN_TSALLIS}
_PARAM_NAME = {MeasureKind.RENYI: "alpha", MeasureKind.DOWN_RENYI: "gamma",
               MeasureKind.TSALLIS: "beta", MeasureKind.DOWN_TSALLIS: "beta"}


@dataclass(frozen=True)
class MeasureId:
    """A named uncertainty measure, optionally with its order parameter.

    ``RENYI`` takes ``alpha >= 0`` (including ``inf``), ``DOWN_RENYI`` takes
    ``gamma`` in (0, 1), ``TSALLIS`` takes ``beta > 0`` and ``DOWN_TSALLIS``
    takes ``beta`` in (0, 1).
    """

    kind: MeasureKind
    param: Optional[float] = None

    def __post_init__(self):
        k, a = self.kind, self.param
        if k in _PARAMETRIC:
            if a is None or math.isnan(a):
                raise UncertaintyError(f"{k.value} needs the {_PARAM_NAME[k]} parameter")
            object.__setattr__(self, "param", float(a))
            a = self.param
        elif a is not None:
            raise UncertaintyError(f"{k.value} takes no parameter")
        if k is MeasureKind.RENYI and a < 0:
            raise UnsupportedOrderError(f"Renyi entropy needs alpha >= 0, got {a}")
        if k is MeasureKind.TSALLIS and not (0 < a < math.inf):
            raise UnsupportedOrderError(f"Tsallis entropy needs beta > 0, got {a}")
        if k in (MeasureKind.DOWN_RENYI, MeasureKind.DOWN_TSALLIS) and not 0 < a < 1:
            raise UnsupportedOrderError(
                f"{k.value} is only defined for {_PARAM_NAME[k]} in (0, 1), got {a}")

    @property
    def generator(self) -> tuple[DivergenceSpec, Direction]:
        """The (divergence, direction) pair that induces this measure."""
        k, a = self.kind, self.param
        if k is MeasureKind.SHANNON:
            return DivergenceSpec.kl(), Direction.UP
        if k is MeasureKind.RENYI:
            return DivergenceSpec.renyi(a), Direction.UP
        if k is MeasureKind.HARTLEY:
            return DivergenceSpec.renyi(0.0), Direction.UP
        if k is MeasureKind.BHATTACHARYYA:
            return DivergenceSpec.renyi(0.5), Direction.UP
        if k is MeasureKind.MIN_ENTROPY:
            return DivergenceSpec.renyi(math.inf), Direction.UP
        if k is MeasureKind.DOWN_RENYI:
            return DivergenceSpec.renyi(1.0 - a), Direction.DOWN
        if k is MeasureKind.JENSEN_SHANNON:
            return DivergenceSpec.jensen_shannon(), Direction.UP
        if k is MeasureKind.TSALLIS:
            return DivergenceSpec.tsallis(a), Direction.UP
        if k is MeasureKind.DOWN_TSALLIS:
            return DivergenceSpec.tsallis(a), Direction.DOWN
        if k is MeasureKind.HELLINGER:
            return DivergenceSpec.hellinger(), Direction.UP
        return DivergenceSpec.total_variation(), Direction.UP

    def label(self) -> str:
        if self.param is None:
            return self.kind.value
        return f"{self.kind.value}({_PARAM_NAME[self.kind]}={self.param:g})"

    __str__ = label

    # short constructors
    @classmethod
    def shannon(cls):
        return cls(MeasureKind.SHANNON)

    @classmethod
    def renyi(cls, alpha):
        return cls(MeasureKind.RENYI, alpha)

    @classmethod
    def hartley(cls):
        return cls(MeasureKind.HARTLEY)

    @classmethod
    def bhattacharyya(cls):
        return cls(MeasureKind.BHATTACHARYYA)

    @classmethod
    def min_entropy(cls):
        return cls(MeasureKind.MIN_ENTROPY)

    @classmethod
    def down_renyi(cls, gamma):
        return cls(MeasureKind.DOWN_RENYI, gamma)

    @classmethod
    def jensen_shannon(cls):
        return cls(MeasureKind.JENSEN_SHANNON)

    @classmethod
    def tsallis(cls, beta):
        return cls(MeasureKind.TSALLIS, beta)

    @classmethod
    def down_tsallis(cls, beta):
        return cls(MeasureKind.DOWN_TSALLIS, beta)

    @classmethod
    def hellinger(cls):
        return cls(MeasureKind.HELLINGER)

    @classmethod
    def absolute(cls):
        return cls(MeasureKind.ABSOLUTE)


# -- generic construction ----------------------------------------------------

def _check_down_order(spec: DivergenceSpec) -> None:
    if spec.family is Family.RENYI and not 0 < spec.alpha < 1:
        raise UnsupportedOrderError(
            f"down construction needs Renyi alpha in (0, 1), got {spec.alpha}")
    if spec.family is Family.TSALLIS and not 0 < spec.beta < 1:
        raise UnsupportedOrderError(
            f"down construction needs Tsallis beta in (0, 1), got {spec.beta}")


def reference_divergence(spec: DivergenceSpec, n: int, direction: Direction,
                         index: int = 0) -> float:
    """The constant term: D(C||U) for UP, D(U||C) for DOWN."""
    c, u = certain(n, index).probs, uniform(n).probs
    if direction is Direction.UP:
        return float(divergence_array(spec, c, u))
    return float(divergence_array(spec, u, c))


def u_up_array(spec: DivergenceSpec, p: np.ndarray) -> np.ndarray:
    """Up construction on stacked distributions of shape (..., n); no validation."""
    n = p.shape[-1]
    ref = reference_divergence(spec, n, Direction.UP)
    if math.isinf(ref):
        raise InfiniteReferenceError(f"D(C||U) is infinite for {spec.label()}")
    u = np.full(n, 1.0 / n)
    return ref - divergence_array(spec, p, u)


def u_down_array(spec: DivergenceSpec, p: np.ndarray) -> np.ndarray:
    """Down construction on stacked distributions of shape (..., n); no validation."""
    _check_down_order(spec)
    n = p.shape[-1]
    ref = reference_divergence(spec, n, Direction.DOWN)
    if math.isinf(ref):
        raise InfiniteReferenceError(f"D(U||C) is infinite for {spec.label()}")
    u = np.full(n, 1.0 / n)
    return ref - divergence_array(spec, u, p)


def u_up(spec: DivergenceSpec, p: DistributionLike) -> float:
    """``D(C||U) - D(p||U)`` evaluated directly from the divergence."""
    return float(u_up_array(spec, as_distribution(p).probs)) + 0.0


def u_down(spec: DivergenceSpec, p: DistributionLike) -> float:
    """``D(U||C) - D(U||p)`` evaluated directly from the divergence."""
    value = float(u_down_array(spec, as_distribution(p).probs))
    if math.isinf(value):
        raise UncertaintyError(f"D(U||p) is infinite for {spec.label()}; p needs full support")
    return value + 0.0


def generic_array(m: MeasureId, p: np.ndarray) -> np.ndarray:
    spec, direction = m.generator
    if direction is Direction.UP:
        return u_up_array(spec, p)
    return u_down_array(spec, p)


def generic(m: MeasureId, p: DistributionLike) -> float:
    """Evaluate ``m`` through its generating divergence rather than its closed form."""
    spec, direction = m.generator
    return u_up(spec, p) if direction is Direction.UP else u_down(spec, p)


# -- closed forms --------------------------------------------------------------

def _xlog2x(t):
    safe = np.where(t > 0, t, 1.0)
    return np.where(t > 0, t * np.log2(safe), 0.0)


def _power_sum(p, a):
    pos = p > 0
    return np.where(pos, np.where(pos, p, 1.0) ** a, 0.0).sum(axis=-1)


def _shannon(p):
    return -_xlog2x(p).sum(axis=-1)


def _hartley(p):
    return np.log2((p > SUPPORT_TOL).sum(axis=-1))


def _min_entropy(p):
    return -np.log2(p.max(axis=-1))


def closed_form_array(m: MeasureId, p: np.ndarray) -> np.ndarray:
    """Closed-form value of ``m`` on stacked distributions (..., n); no validation."""
    p = np.asarray(p, dtype=np.float64)
    n = p.shape[-1]
    k, a = m.kind, m.param
    if k is MeasureKind.SHANNON:
        return _shannon(p)
    if k is MeasureKind.RENYI:
        if a == 1:
            return _shannon(p)
        if a == 0:
            return _hartley(p)
        if math.isinf(a):
            return _min_entropy(p)
        return np.log2(_power_sum(p, a)) / (1.0 - a)
    if k is MeasureKind.HARTLEY:
        return _hartley(p)
    if k is MeasureKind.BHATTACHARYYA:
        return 2.0 * np.log2(np.sqrt(p).sum(axis=-1))
    if k is MeasureKind.MIN_ENTROPY:
        return _min_entropy(p)
    if k is MeasureKind.DOWN_RENYI:
        return np.log2(_power_sum(p, a)) / a
    if k is MeasureKind.JENSEN_SHANNON:
        return (-((n + 1) / n) * math.log2(n + 1) + _shannon(p)
                + _xlog2x(n * p + 1.0).sum(axis=-1) / n)
    if k is MeasureKind.TSALLIS:
        if a == 1:
            return _shannon(p)
        return n ** (a - 1.0) * (1.0 - _power_sum(p, a)) / (a - 1.0)
    if k is MeasureKind.DOWN_TSALLIS:
        return n ** (-a) * (1.0 - _power_sum(p, 1.0 - a)) / (a - 1.0)
    if k is MeasureKind.HELLINGER:
        return (2.0 / math.sqrt(n)) * (np.sqrt(p).sum(axis=-1) - 1.0)
    # ABSOLUTE
    return 1.0 - 1.0 / n - 0.5 * np.abs(1.0 / n - p).sum(axis=-1)


def closed_form(m: MeasureId, p: DistributionLike) -> float:
    """Closed-form value of the measure ``m`` at ``p`` (bits where logarithmic)."""
    return float(closed_form_array(m, as_distribution(p).probs)) + 0.0


def max_value(m: MeasureId, n: int) -> float:
    """Value of ``m`` at the uniform distribution on ``n`` outcomes."""
    return closed_form(m, uniform(n))


def renyi_entropy(alpha: float, p: DistributionLike) -> float:
    return closed_form(MeasureId.renyi(alpha), p)


def shannon_entropy(p: DistributionLike) -> float:
    return closed_form(MeasureId.shannon(), p)


def tsallis_entropy(beta: float, p: DistributionLike) -> float:
    """Plain Tsallis entropy ``(1 - sum p**beta)/(beta - 1)`` without the n-dependent factor."""
    probs = as_distribution(p).probs
    if beta == 1:
        return float(_shannon(probs)) * math.log(2.0)
    return float((1.0 - _power_sum(probs, beta)) / (beta - 1.0)) + 0.0


_BY_NAME = {k.value: k for k in MeasureKind}
_ALIASES = {
    "jensen-shannon": MeasureKind.JENSEN_SHANNON,
    "min": MeasureKind.MIN_ENTROPY,
    "minentropy": MeasureKind.MIN_ENTROPY,
    "tv": MeasureKind.ABSOLUTE,
}


def measure_from_name(name: str, param: Optional[float] = None) -> MeasureId:
    """Look up a measure by its CLI name (``shannon``, ``renyi``, ``down-tsallis``...)."""
    key = name.strip().lower().replace("_", "-")
    kind = _BY_NAME.get(key) or _ALIASES.get(key)
    if kind is None:
        raise UncertaintyError(f"unknown measure {name!r}")
    return MeasureId(kind, param if kind in _PARAMETRIC else None)


def needs_parameter(name: str) -> Optional[str]:
    """Name of the order parameter a measure requires, or None."""
    kind = measure_from_name(name, 0.5).kind
    return _PARAM_NAME.get(kind)
