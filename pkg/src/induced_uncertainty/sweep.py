"""One-parameter sweeps of the two-outcome classical family and the qubit family.

The classical sweep evaluates measures on ``{p, 1 - p}``; the quantum sweep
evaluates mixedness measures on ``p |psi><psi| + (1 - p) I/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import quantum as q
from .exceptions import UncertaintyError
from .uncertainty import MeasureId, closed_form_array, max_value, measure_from_name

NORMALIZE_MODES = ("none", "paper", "all")
CLASSICAL_DEFAULT = ("shannon", "js", "absolute", "hellinger")
QUANTUM_DEFAULT = ("bures", "l1", "hs", "shannon")
# columns normalized by the selective mode ("paper"): Hellinger-type and absolute
CLASSICAL_CAPTION = {"hellinger", "absolute"}
QUANTUM_CAPTION = {"bures", "qhellinger"}


@dataclass(frozen=True)
class Column:
    label: str
    values: np.ndarray
    divisor: float = 1.0


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    grid: np.ndarray
    columns: list[Column] = field(default_factory=list)

    def __post_init__(self):
        for col in self.columns:
            if len(col.values) != len(self.grid):
                raise UncertaintyError(f"column {col.label!r} length differs from grid")

    def column(self, label: str) -> np.ndarray:
        for col in self.columns:
            if col.label == label:
                return col.values
        raise KeyError(label)

    def row(self, value: float) -> dict[str, float]:
        k = int(np.argmin(np.abs(self.grid - value)))
        return {c.label: float(c.values[k]) for c in self.columns}

    def to_csv(self) -> str:
        """CSV with ``%.12g`` numbers and ``\\n`` line endings."""
        header = ",".join([self.parameter] + [c.label for c in self.columns])
        lines = [header]
        for k, x in enumerate(self.grid):
            cells = [x] + [c.values[k] for c in self.columns]
            lines.append(",".join("%.12g" % (float(v) + 0.0) for v in cells))
        return "\n".join(lines) + "\n"


def make_grid(step: float, max_step: float) -> np.ndarray:
    """``0, step, 2 step, ...`` up to 1 inclusive, rounded to 12 decimals."""
    if not (isinstance(step, (int, float)) and math.isfinite(step) and 0 < step <= max_step):
        raise UncertaintyError(f"grid step must be in (0, {max_step:g}], got {step!r}")
    count = int(math.floor(1.0 / step + 1e-9))
    grid = np.round(np.arange(count + 1) * step, 12)
    if grid[-1] < 1.0 - 1e-12:
        grid = np.append(grid, 1.0)
    return np.minimum(grid, 1.0)


def _check_mode(normalize: str) -> None:
    if normalize not in NORMALIZE_MODES:
        raise UncertaintyError(f"normalize must be one of {NORMALIZE_MODES}, got {normalize!r}")


def classical_sweep(step: float = 0.01, measures: Sequence[str] = CLASSICAL_DEFAULT,
                    normalize: str = "none", params: Optional[dict] = None) -> SweepResult:
    """Measures on ``{p, 1 - p}`` over a uniform grid of ``p`` in [0, 1].

    ``params`` maps a measure name to its order parameter for parametric
    measures such as ``renyi`` or ``tsallis``.
    """
    _check_mode(normalize)
    if not measures:
        raise UncertaintyError("at least one measure is required")
    params = params or {}
    grid = make_grid(step, 0.5)
    probs = np.stack([grid, 1.0 - grid], axis=1)
    cols = []
    for name in measures:
        m: MeasureId = measure_from_name(name, params.get(name))
        values = closed_form_array(m, probs) + 0.0
        divisor = 1.0
        if normalize == "all" or (normalize == "paper" and name in CLASSICAL_CAPTION):
            divisor = max_value(m, 2)
        cols.append(Column(name, values / divisor, divisor))
    return SweepResult("p", grid, cols)


def _quantum_spec(name: str, params: dict):
    if name == "shannon":
        return q.QDistanceSpec.gen_renyi(1.0)
    if name in ("bures", "qhellinger", "hs"):
        return q.QDistanceSpec(q.QFamily(name))
    if name.startswith("l") and name[1:].isdigit():
        return q.QDistanceSpec.schatten(int(name[1:]))
    if name in ("gen-renyi", "gen-tsallis"):
        if params.get(name) is None:
            raise UncertaintyError(f"{name} needs an order parameter")
        return q.QDistanceSpec(q.QFamily(name), params[name])
    raise UncertaintyError(f"unknown quantum sweep column {name!r}")


def qubit_family(p: float, psi: np.ndarray) -> q.DensityMatrix:
    proj = np.outer(psi, psi.conj())
    return q.make_density_matrix(p * proj + (1.0 - p) * np.eye(2) / 2.0)


def quantum_sweep(step: float = 0.01, measures: Sequence[str] = QUANTUM_DEFAULT,
                  normalize: str = "none", params: Optional[dict] = None,
                  seed: Optional[int] = None) -> SweepResult:
    """Mixedness of ``p |psi><psi| + (1 - p) I/2`` over a grid of ``p`` in [0, 1].

    ``psi`` is ``|0>`` unless ``seed`` is given, in which case it is a seeded
    random pure state. Column ``l1`` is the Schatten-1 measure and
    ``shannon`` is the von Neumann entropy.
    """
    _check_mode(normalize)
    if not measures:
        raise UncertaintyError("at least one measure is required")
    params = params or {}
    grid = make_grid(step, 1.0)
    if seed is None:
        psi = np.array([1.0, 0.0], dtype=np.complex128)
    else:
        rng = np.random.default_rng(seed)
        psi = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        psi /= np.linalg.norm(psi)
    states = [qubit_family(p, psi) for p in grid]
    cols = []
    for name in measures:
        spec = _quantum_spec(name, params)
        values = np.array([q.induced_quantum_uncertainty(spec, rho) for rho in states])
        divisor = 1.0
        if normalize == "all" or (normalize == "paper" and name in QUANTUM_CAPTION):
            divisor = q.quantum_max_value(spec, 2)
        cols.append(Column(name, values / divisor, divisor))
    return SweepResult("p", grid, cols)
