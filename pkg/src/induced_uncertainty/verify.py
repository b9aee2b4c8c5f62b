"""Property suites certifying the measures.

Every check draws its inputs from a seeded generator, so a report is
reproducible from ``(measure, n, trials, seed)``, and each recorded failure
carries the serialized input that triggered it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

import numpy as np

from . import quantum as q
from .distributions import majorizes_array, random_simplex, robin_hood
from .errata import collect_errata
from .linalg import jacobi_eigh
from .uncertainty import MeasureId, closed_form_array, generic_array

ALGEBRA_TOL = 1e-12
ORACLE_TOL = 1e-10
SPECTRAL_TOL = 1e-9

Measure = Union[MeasureId, Callable[[np.ndarray], float]]

CLASSICAL_MEASURES = (
    MeasureId.shannon(),
    MeasureId.renyi(0.3),
    MeasureId.renyi(0.5),
    MeasureId.renyi(2.0),
    MeasureId.renyi(5.0),
    MeasureId.hartley(),
    MeasureId.bhattacharyya(),
    MeasureId.min_entropy(),
    MeasureId.down_renyi(0.3),
    MeasureId.down_renyi(0.7),
    MeasureId.jensen_shannon(),
    MeasureId.tsallis(0.5),
    MeasureId.tsallis(2.0),
    MeasureId.tsallis(3.0),
    MeasureId.down_tsallis(0.3),
    MeasureId.down_tsallis(0.7),
    MeasureId.hellinger(),
    MeasureId.absolute(),
)

QUANTUM_SPECS = (
    q.QDistanceSpec.bures(),
    q.QDistanceSpec.qhellinger(),
    q.QDistanceSpec.schatten(1),
    q.QDistanceSpec.schatten(3),
    q.QDistanceSpec.hilbert_schmidt(),
    q.QDistanceSpec.gen_renyi(0.5),
    q.QDistanceSpec.gen_renyi(2.0),
    q.QDistanceSpec.gen_tsallis(0.5),
    q.QDistanceSpec.gen_tsallis(2.0),
)


@dataclass(frozen=True)
class Failure:
    input: str
    observed: float
    bound: float

    def __str__(self):
        return f"  input={self.input} observed={self.observed!r} bound={self.bound!r}"


@dataclass
class PropertyReport:
    name: str
    trials: int
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_text(self, max_failures: int | None = None) -> str:
        """``PROPERTY name trials=N failures=K`` then one line per failure."""
        lines = [f"PROPERTY {self.name} trials={self.trials} failures={len(self.failures)}"]
        shown = self.failures if max_failures is None else self.failures[:max_failures]
        lines.extend(str(f) for f in shown)
        if len(shown) < len(self.failures):
            lines.append(f"  ... {len(self.failures) - len(shown)} more")
        return "\n".join(lines)

    __str__ = to_text


def _ser(x) -> str:
    x = np.asarray(x)
    if np.iscomplexobj(x):
        return repr([[complex(v) for v in row] for row in x])
    return repr([float(v) for v in x.ravel()])


def _label(measure: Measure) -> str:
    if isinstance(measure, MeasureId):
        return measure.label()
    return getattr(measure, "__name__", "measure")


def _evaluate(measure: Measure, p: np.ndarray) -> np.ndarray:
    if isinstance(measure, MeasureId):
        return closed_form_array(measure, p)
    return np.array([float(measure(row)) for row in p])


def _sample_starts(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Simplex samples, about half of them restricted to a random support."""
    p = random_simplex(n, count, rng)
    sparse = rng.random(count) < 0.5
    keep = rng.random((count, n)) < rng.random((count, 1))
    keep[np.arange(count), rng.integers(0, n, count)] = True
    p = np.where(sparse[:, None] & ~keep, 0.0, p)
    return p / p.sum(axis=1, keepdims=True)


# -- classical suites ---------------------------------------------------------

def check_schur_concavity(measure: Measure, n: int, trials: int, seed: int) -> PropertyReport:
    """``P`` majorizes ``Q`` implies ``U(P) <= U(Q) + 1e-12`` on random pairs."""
    rng = np.random.default_rng(seed)
    p = _sample_starts(n, trials, rng)
    qq = robin_hood(p, rng.integers(1, 2 * n + 1, trials), rng)
    qq /= qq.sum(axis=1, keepdims=True)
    report = PropertyReport(f"schur-concavity[{_label(measure)},n={n}]", trials)
    valid = majorizes_array(p, qq)
    up, uq = _evaluate(measure, p), _evaluate(measure, qq)
    for k in np.flatnonzero(~valid | ~(up <= uq + ALGEBRA_TOL)):
        report.failures.append(Failure(f"P={_ser(p[k])} Q={_ser(qq[k])}", float(up[k]),
                                       float(uq[k]) + ALGEBRA_TOL))
    return report


def check_faithfulness(measure: Measure, n: int, trials: int, seed: int) -> PropertyReport:
    """Zero at every certain distribution, non-negative, maximal at uniform."""
    rng = np.random.default_rng(seed)
    report = PropertyReport(f"faithfulness[{_label(measure)},n={n}]", trials)
    certains = np.eye(n)
    for k, val in enumerate(_evaluate(measure, certains)):
        if not abs(val) <= ALGEBRA_TOL:
            report.failures.append(Failure(f"certain(n={n},index={k})", float(val), ALGEBRA_TOL))
    top = float(_evaluate(measure, np.full((1, n), 1.0 / n))[0])
    p = _sample_starts(n, trials, rng)
    vals = _evaluate(measure, p)
    for k in np.flatnonzero(~(vals >= -ALGEBRA_TOL)):
        report.failures.append(Failure(_ser(p[k]), float(vals[k]), -ALGEBRA_TOL))
    for k in np.flatnonzero(~(vals <= top + ALGEBRA_TOL)):
        report.failures.append(Failure(_ser(p[k]), float(vals[k]), top + ALGEBRA_TOL))
    return report


def check_oracle_equivalence(measure: MeasureId, n: int, trials: int, seed: int) -> PropertyReport:
    """Closed form against the up/down construction on full-support inputs."""
    rng = np.random.default_rng(seed)
    p = random_simplex(n, trials, rng)
    report = PropertyReport(f"oracle-equivalence[{measure.label()},n={n}]", trials)
    gap = np.abs(closed_form_array(measure, p) - generic_array(measure, p))
    for k in np.flatnonzero(~(gap <= ORACLE_TOL)):
        report.failures.append(Failure(_ser(p[k]), float(gap[k]), ORACLE_TOL))
    return report


# -- quantum suites ------------------------------------------------------------

def _lp_induced(p: np.ndarray, order: float) -> float:
    """Up construction with the l_p distance between probability vectors."""
    n = p.size
    u = np.full(n, 1.0 / n)
    c = np.eye(n)[0]
    dist = lambda a, b: float(np.sum(np.abs(a - b) ** order) ** (1.0 / order))
    return dist(c, u) - dist(p, u)


def classical_counterpart(spec: q.QDistanceSpec, p: np.ndarray) -> float:
    """Classical measure that the quantum one should reduce to on diagonal states."""
    fam, a = spec.family, spec.param
    row = np.asarray(p, dtype=np.float64)[None, :]
    if fam is q.QFamily.GEN_RENYI:
        return float(closed_form_array(MeasureId.renyi(a), row)[0])
    if fam is q.QFamily.GEN_TSALLIS:
        return float(closed_form_array(MeasureId.tsallis(a), row)[0])
    if fam in (q.QFamily.BURES, q.QFamily.QHELLINGER):
        return float(closed_form_array(MeasureId.hellinger(), row)[0])
    if fam is q.QFamily.HILBERT_SCHMIDT:
        return float(1.0 - np.sum(p ** 2))
    return _lp_induced(np.asarray(p, dtype=np.float64), a)


def _dims(d: int | Iterable[int]) -> list[int]:
    return [d] if isinstance(d, int) else list(d)


def check_quantum_classical_reduction(spec: q.QDistanceSpec, d, trials: int,
                                      seed: int) -> PropertyReport:
    """On random diagonal states the quantum measure equals its classical counterpart."""
    rng = np.random.default_rng(seed)
    dims = _dims(d)
    report = PropertyReport(f"quantum-reduction[{spec.label()},d={_dims_label(dims)}]", trials)
    for t in range(trials):
        dim = dims[t % len(dims)]
        p = random_simplex(dim, 1, rng)[0]
        rho = q.make_density_matrix(np.diag(p))
        quantum = q.induced_quantum_uncertainty(spec, rho)
        classical = classical_counterpart(spec, p)
        if not abs(quantum - classical) <= SPECTRAL_TOL:
            report.failures.append(Failure(_ser(p), quantum - classical, SPECTRAL_TOL))
    return report


def _dims_label(dims):
    return str(dims[0]) if len(dims) == 1 else f"{min(dims)}..{max(dims)}"


def _random_state(dim: int, rng: np.random.Generator) -> q.DensityMatrix:
    return q.random_density_matrix(dim, int(rng.integers(1, dim + 1)), rng)


def check_unitary_invariance(spec: q.QDistanceSpec, d, trials: int, seed: int) -> PropertyReport:
    """``U(W rho W^H) = U(rho)`` for random unitaries ``W``."""
    rng = np.random.default_rng(seed)
    dims = _dims(d)
    report = PropertyReport(f"unitary-invariance[{spec.label()},d={_dims_label(dims)}]", trials)
    for t in range(trials):
        dim = dims[t % len(dims)]
        rho = _random_state(dim, rng)
        w = q.random_unitary(dim, rng)
        gap = (q.induced_quantum_uncertainty(spec, q.rotate(rho, w))
               - q.induced_quantum_uncertainty(spec, rho))
        if not abs(gap) <= SPECTRAL_TOL:
            report.failures.append(Failure(_ser(rho.data), gap, SPECTRAL_TOL))
    return report


def check_purity_extremes(spec: q.QDistanceSpec, d, trials: int, seed: int) -> PropertyReport:
    """Zero on random pure states, non-negative, and largest at ``I/d``."""
    rng = np.random.default_rng(seed)
    dims = _dims(d)
    report = PropertyReport(f"purity-extremes[{spec.label()},d={_dims_label(dims)}]", trials)
    tops = {dim: q.quantum_max_value(spec, dim) for dim in dims}
    for t in range(trials):
        dim = dims[t % len(dims)]
        pure = q.random_density_matrix(dim, 1, rng)
        val = q.induced_quantum_uncertainty(spec, pure)
        if not abs(val) <= SPECTRAL_TOL:
            report.failures.append(Failure(_ser(pure.data), val, SPECTRAL_TOL))
        mixed = _random_state(dim, rng)
        val = q.induced_quantum_uncertainty(spec, mixed)
        if not -SPECTRAL_TOL <= val <= tops[dim] + SPECTRAL_TOL:
            report.failures.append(Failure(_ser(mixed.data), val, tops[dim] + SPECTRAL_TOL))
    return report


def check_spectral_majorization(spec: q.QDistanceSpec, d, trials: int,
                                seed: int) -> PropertyReport:
    """spectrum(rho) majorizes spectrum(sigma) implies ``U(rho) <= U(sigma) + 1e-9``."""
    rng = np.random.default_rng(seed)
    dims = _dims(d)
    report = PropertyReport(f"spectral-majorization[{spec.label()},d={_dims_label(dims)}]",
                            trials)
    for t in range(trials):
        dim = dims[t % len(dims)]
        lam = _sample_starts(dim, 1, rng)[0]
        mu = robin_hood(lam, int(rng.integers(1, 2 * dim + 1)), rng)
        mu /= mu.sum()
        w1, w2 = q.random_unitary(dim, rng), q.random_unitary(dim, rng)
        rho = q.make_density_matrix((w1 * lam) @ w1.conj().T)
        sigma = q.make_density_matrix((w2 * mu) @ w2.conj().T)
        ur = q.induced_quantum_uncertainty(spec, rho)
        us = q.induced_quantum_uncertainty(spec, sigma)
        if not ur <= us + SPECTRAL_TOL:
            report.failures.append(Failure(f"lambda={_ser(lam)} mu={_ser(mu)}", ur,
                                           us + SPECTRAL_TOL))
    return report


def check_quantum_closed_form(spec: q.QDistanceSpec, d, trials: int, seed: int) -> PropertyReport:
    """Two-term construction against the spectral closed form."""
    rng = np.random.default_rng(seed)
    dims = _dims(d)
    report = PropertyReport(f"quantum-closed-form[{spec.label()},d={_dims_label(dims)}]",
                            trials)
    for t in range(trials):
        dim = dims[t % len(dims)]
        rho = _random_state(dim, rng)
        gap = q.induced_quantum_uncertainty(spec, rho) - q.quantum_closed_form(spec, rho)
        if not abs(gap) <= SPECTRAL_TOL:
            report.failures.append(Failure(_ser(rho.data), gap, SPECTRAL_TOL))
    return report


def check_entrywise_basis_dependence(d, trials: int, seed: int) -> PropertyReport:
    """Entrywise l_2 is unitarily invariant; entrywise l_1 is not.

    The l_1 half passes when at least one rotation moves the value by more
    than 1e-3, which is the witness that the measure depends on the basis.
    """
    rng = np.random.default_rng(seed)
    dims = _dims(d)
    report = PropertyReport(f"entrywise-basis[d={_dims_label(dims)}]", trials)
    l1, l2 = q.QDistanceSpec.entrywise(1), q.QDistanceSpec.entrywise(2)
    widest = 0.0
    for t in range(trials):
        dim = dims[t % len(dims)]
        rho = q.make_density_matrix(np.diag(random_simplex(dim, 1, rng)[0]))
        turned = q.rotate(rho, q.random_unitary(dim, rng))
        gap = (q.induced_quantum_uncertainty(l2, turned)
               - q.induced_quantum_uncertainty(l2, rho))
        if not abs(gap) <= SPECTRAL_TOL:
            report.failures.append(Failure(_ser(turned.data), gap, SPECTRAL_TOL))
        widest = max(widest, abs(q.induced_quantum_uncertainty(l1, turned)
                                 - q.induced_quantum_uncertainty(l1, rho)))
    if not widest > 1e-3:
        report.failures.append(Failure("entrywise l_1 under rotation", widest, 1e-3))
    return report


def eigenvalues_2x2(a: np.ndarray) -> np.ndarray:
    """Descending eigenvalues of a 2x2 Hermitian matrix from its characteristic polynomial."""
    tr = (a[0, 0] + a[1, 1]).real
    det = (a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]).real
    disc = math.sqrt(max(tr * tr - 4.0 * det, 0.0))
    return np.array([(tr + disc) / 2.0, (tr - disc) / 2.0])


def eigenvalues_3x3(a: np.ndarray) -> np.ndarray:
    """Descending eigenvalues of a 3x3 Hermitian matrix (trigonometric cubic roots)."""
    a = np.asarray(a, dtype=np.complex128)
    m = np.trace(a).real / 3.0
    b = a - m * np.eye(3)
    p2 = float(np.sum(np.abs(b) ** 2)) / 6.0
    if p2 == 0.0:
        return np.full(3, m)
    p = math.sqrt(p2)
    c = b / p
    det = (c[0, 0] * (c[1, 1] * c[2, 2] - c[1, 2] * c[2, 1])
           - c[0, 1] * (c[1, 0] * c[2, 2] - c[1, 2] * c[2, 0])
           + c[0, 2] * (c[1, 0] * c[2, 1] - c[1, 1] * c[2, 0])).real
    r = min(1.0, max(-1.0, det / 2.0))
    phi = math.acos(r) / 3.0
    e1 = m + 2.0 * p * math.cos(phi)
    e3 = m + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    return np.array([e1, 3.0 * m - e1 - e3, e3])


def check_eigen_solver(trials: int, seed: int, max_dim: int = 16) -> PropertyReport:
    """Reconstruction, trace, orthonormality, and analytic roots for d = 2, 3."""
    rng = np.random.default_rng(seed)
    report = PropertyReport(f"eigen-solver[d=2..{max_dim}]", trials)
    for t in range(trials):
        dim = 2 + t % (max_dim - 1)
        # a repeated root makes the 3x3 cubic formula itself accurate only to
        # ~sqrt(eps), so the analytic cross-check at d = 3 uses full rank
        rho = (q.random_density_matrix(3, 3, rng) if dim == 3
               else _random_state(dim, rng))
        spec = jacobi_eigh(rho.data)
        v = spec.eigenvectors
        recon = float(np.max(np.abs(spec.reconstruct() - rho.data)))
        orth = float(np.max(np.abs(v.conj().T @ v - np.eye(dim))))
        trace_gap = abs(float(np.sum(spec.eigenvalues)) - 1.0)
        if recon > SPECTRAL_TOL:
            report.failures.append(Failure(_ser(rho.data), recon, SPECTRAL_TOL))
        if orth > 1e-10:
            report.failures.append(Failure(_ser(rho.data), orth, 1e-10))
        if trace_gap > 1e-8:
            report.failures.append(Failure(_ser(rho.data), trace_gap, 1e-8))
        if dim in (2, 3):
            exact = eigenvalues_2x2(rho.data) if dim == 2 else eigenvalues_3x3(rho.data)
            gap = float(np.max(np.abs(exact - spec.eigenvalues)))
            if gap > SPECTRAL_TOL:
                report.failures.append(Failure(_ser(rho.data), gap, SPECTRAL_TOL))
    return report


# -- suites ---------------------------------------------------------------------

def classical_suite(seed: int = 0, schur_trials: int = 10_000, oracle_trials: int = 1_000,
                    ns: Iterable[int] = range(2, 7),
                    measures: Iterable[MeasureId] = CLASSICAL_MEASURES) -> list[PropertyReport]:
    reports = []
    for i, m in enumerate(measures):
        for n in ns:
            s = seed * 1_000_003 + 97 * i + n
            reports.append(check_schur_concavity(m, n, schur_trials, s))
            reports.append(check_faithfulness(m, n, schur_trials, s + 1))
            reports.append(check_oracle_equivalence(m, n, oracle_trials, s + 2))
    return reports


def quantum_suite(seed: int = 0, reduction_trials: int = 1_000, state_trials: int = 100,
                  eigen_trials: int = 1_000, dims: Iterable[int] = range(2, 9),
                  specs: Iterable[q.QDistanceSpec] = QUANTUM_SPECS) -> list[PropertyReport]:
    dims = list(dims)
    reports = []
    for i, spec in enumerate(specs):
        s = seed * 1_000_003 + 131 * i
        reports.append(check_quantum_classical_reduction(spec, dims, reduction_trials, s))
        reports.append(check_unitary_invariance(spec, dims, state_trials, s + 1))
        reports.append(check_purity_extremes(spec, dims, state_trials, s + 2))
        reports.append(check_spectral_majorization(spec, dims, state_trials, s + 3))
        reports.append(check_quantum_closed_form(spec, dims, state_trials, s + 4))
    reports.append(check_entrywise_basis_dependence(dims, state_trials, seed * 1_000_003 + 5))
    reports.append(check_eigen_solver(eigen_trials, seed * 1_000_003 + 7))
    return reports


def errata_suite() -> list[PropertyReport]:
    """One report per printed formula; a report passes when the discrepancy reproduces."""
    reports = []
    for e in collect_errata():
        r = PropertyReport(f"errata[{e.name}]", 1)
        if not e.reproduced:
            r.failures.append(Failure(e.where, e.printed, e.direct))
        reports.append(r)
    return reports
