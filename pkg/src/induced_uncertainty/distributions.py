"""Finite discrete probability distributions and the majorization order."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    EmptyError,
    IndexOutOfRangeError,
    NegativeEntryError,
    NotNormalizedError,
    UncertaintyError,
)

NEGATIVE_TOL = 1e-12
SUM_TOL = 1e-9
MAJORIZATION_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ProbabilityDistribution:
    """A validated point on the probability simplex.

    Use :func:`make_distribution` (or :func:`uniform`, :func:`certain`,
    :func:`random_distribution`) instead of calling the constructor.
    ``probs`` is a read-only float64 array summing to one.
    """

    probs: np.ndarray

    @property
    def n(self) -> int:
        return int(self.probs.shape[0])

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.probs.tolist())

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.probs
        return self.probs.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, ProbabilityDistribution):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.probs, other.probs))

    def __hash__(self):
        return hash(self.probs.tobytes())

    def __repr__(self):
        return f"ProbabilityDistribution({self.probs.tolist()!r})"


DistributionLike = Union[ProbabilityDistribution, Sequence[float], np.ndarray]


def _freeze(arr: np.ndarray) -> ProbabilityDistribution:
    arr = np.array(arr, dtype=np.float64)
    arr.setflags(write=False)
    return ProbabilityDistribution(arr)


def make_distribution(values: Iterable[float]) -> ProbabilityDistribution:
    """Validate ``values`` and return them as a renormalized distribution.

    Entries in ``[-1e-12, 0)`` are treated as rounding noise and set to zero.
    The sum must be within ``1e-9`` of one; the stored array is divided by
    its sum so it is normalized in working precision.
    """
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                     dtype=np.float64).ravel()
    if arr.size == 0:
        raise EmptyError("distribution must have at least one entry")
    if not np.all(np.isfinite(arr)):
        raise UncertaintyError("distribution entries must be finite")
    if np.any(arr < -NEGATIVE_TOL):
        raise NegativeEntryError(f"negative probability {arr.min()!r}")
    arr = np.where(arr < 0.0, 0.0, arr)
    total = arr.sum()
    if abs(total - 1.0) > SUM_TOL:
        raise NotNormalizedError(f"probabilities sum to {total!r}, not 1")
    return _freeze(arr / total)


def as_distribution(p: DistributionLike) -> ProbabilityDistribution:
    if isinstance(p, ProbabilityDistribution):
        return p
    return make_distribution(p)


def uniform(n: int) -> ProbabilityDistribution:
    """The maximally uncertain distribution (1/n, ..., 1/n)."""
    if n < 1:
        raise EmptyError("n must be a positive integer")
    return _freeze(np.full(n, 1.0 / n))


def certain(n: int, index: int = 0) -> ProbabilityDistribution:
    """The point mass on ``index`` (0-based) in an ``n``-outcome space."""
    if n < 1:
        raise EmptyError("n must be a positive integer")
    if not 0 <= index < n:
        raise IndexOutOfRangeError(f"index {index} out of range for n={n}")
    arr = np.zeros(n)
    arr[index] = 1.0
    return _freeze(arr)


def majorizes(p: DistributionLike, q: DistributionLike) -> bool:
    """True iff ``p`` majorizes ``q`` (p is at least as concentrated as q)."""
    p, q = as_distribution(p), as_distribution(q)
    if p.n != q.n:
        raise DimensionMismatchError(f"dimensions differ: {p.n} vs {q.n}")
    return bool(majorizes_array(p.probs, q.probs))


def majorizes_array(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Row-wise majorization test for stacked distributions of shape (..., n)."""
    ps = np.cumsum(-np.sort(-p, axis=-1), axis=-1)
    qs = np.cumsum(-np.sort(-q, axis=-1), axis=-1)
    return np.all(ps >= qs - MAJORIZATION_TOL, axis=-1)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_simplex(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` uniform (flat Dirichlet) samples on the n-simplex, shape (size, n)."""
    e = rng.standard_exponential((size, n))
    return e / e.sum(axis=1, keepdims=True)


def random_distribution(n: int, seed: int) -> ProbabilityDistribution:
    """Uniformly random point on the simplex, deterministic per ``seed``."""
    if n < 1:
        raise EmptyError("n must be a positive integer")
    return _freeze(random_simplex(n, 1, _rng(seed))[0])


def robin_hood(p: np.ndarray, steps, rng: np.random.Generator) -> np.ndarray:
    """Apply random Robin-Hood transfers to each row of ``p``.

    Each transfer picks two distinct indices, and moves a uniform random
    fraction of half their gap from the richer to the poorer entry. The
    result is majorized by the input row. ``steps`` is an int or a per-row
    array of step counts.
    """
    q = np.array(p, dtype=np.float64, copy=True)
    if q.ndim == 1:
        return robin_hood(q[None, :], steps, rng)[0]
    rows, n = q.shape
    steps = np.broadcast_to(np.asarray(steps), (rows,))
    idx = np.arange(rows)
    for step in range(int(steps.max(initial=0))):
        active = steps > step
        i = rng.integers(0, n, rows)
        j = (i + rng.integers(1, n, rows)) % n
        frac = rng.random(rows)
        rich = np.where(q[idx, i] >= q[idx, j], i, j)
        poor = np.where(rich == i, j, i)
        amount = frac * (q[idx, rich] - q[idx, poor]) / 2.0
        amount = np.where(active, amount, 0.0)
        q[idx, rich] -= amount
        q[idx, poor] += amount
    return q


def random_majorized_pair(n: int, steps: int, seed: int):
    """Return ``(P, Q)`` with ``P`` random and ``Q`` obtained by ``steps`` transfers.

    ``majorizes(P, Q)`` always holds.
    """
    if n < 2:
        raise UncertaintyError("random_majorized_pair needs n >= 2")
    if steps < 1:
        raise UncertaintyError("steps must be >= 1")
    rng = _rng(seed)
    p = random_simplex(n, 1, rng)[0]
    q = robin_hood(p, steps, rng)
    return _freeze(p), _freeze(q / q.sum())


def parse_distribution(text: str) -> ProbabilityDistribution:
    """Parse ``"0.5,0.3,0.2"`` (whitespace around commas allowed)."""
    parts = [s.strip() for s in text.split(",")]
    if not any(parts):
        raise EmptyError("empty distribution string")
    try:
        values = [float(s) for s in parts]
    except ValueError as exc:
        raise UncertaintyError(f"cannot parse distribution {text!r}: {exc}") from None
    return make_distribution(values)


def read_distribution(path) -> ProbabilityDistribution:
    """Read a single-column text file, one probability per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    values = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise UncertaintyError(f"{path}:{lineno}: not a number: {line!r}") from None
    return make_distribution(values)


def write_distribution(p: DistributionLike, path) -> None:
    p = as_distribution(p)
    Path(path).write_text("".join(f"{x:.17g}\n" for x in p.probs))
