"""Density matrices, quantum distances and the mixedness measures they induce.

The quantum analogue of the up construction measures how far a state is
from the maximally mixed state ``I/d``, relative to a pure state::

    U(rho) = D(|psi><psi| || I/d) - D(rho || I/d)

:func:`induced_quantum_uncertainty` evaluates both terms with the distance
itself; :func:`quantum_closed_form` gives the spectral formula.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .distributions import DistributionLike, as_distribution, random_simplex
from .exceptions import (
    DimensionMismatchError,
    NotHermitianError,
    NotPSDError,
    NotUnitTraceError,
    OrthogonalStatesError,
    UncertaintyError,
)
from .linalg import (
    HERMITIAN_TOL,
    Spectrum,
    clean_eigenvalues,
    gram_schmidt,
    jacobi_eigh,
    psd_power,
)

TRACE_TOL = 1e-9
PSD_TOL = 1e-9
RANK_TOL = 1e-10
ORTHOGONAL_TOL = 1e-12
SUPPORT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated d x d density matrix; build with :func:`make_density_matrix`."""

    data: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.data.shape[0])

    @cached_property
    def spectrum(self) -> Spectrum:
        return jacobi_eigh(self.data)

    @property
    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues, descending, with rounding-level negatives clamped to zero."""
        return clean_eigenvalues(self.spectrum.eigenvalues)

    @property
    def rank(self) -> int:
        return int(np.sum(self.spectrum.eigenvalues > RANK_TOL))

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim}, data={self.data.tolist()!r})"


MatrixLike = Union[DensityMatrix, np.ndarray]


def make_density_matrix(entries) -> DensityMatrix:
    """Validate a square complex matrix as a density matrix.

    Raises:
        NotHermitianError: not square, or ``|a_ij - conj(a_ji)| > 1e-10``.
        NotUnitTraceError: ``|tr - 1| > 1e-9``.
        NotPSDError: smallest eigenvalue below ``-1e-9``.
    """
    a = np.array(entries, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise NotHermitianError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise UncertaintyError("matrix entries must be finite")
    if np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL:
        raise NotHermitianError("matrix is not Hermitian")
    a = 0.5 * (a + a.conj().T)
    tr = np.trace(a).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotUnitTraceError(f"trace is {tr!r}, not 1")
    a.setflags(write=False)
    rho = DensityMatrix(a)
    lowest = rho.spectrum.eigenvalues[-1]
    if lowest < -PSD_TOL:
        raise NotPSDError(f"smallest eigenvalue {lowest!r} is negative")
    return rho


def as_density_matrix(rho: MatrixLike) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else make_density_matrix(rho)


def maximally_mixed(d: int) -> DensityMatrix:
    if d < 1:
        raise UncertaintyError("dimension must be positive")
    return make_density_matrix(np.eye(d) / d)


def pure_state(psi) -> DensityMatrix:
    """``|psi><psi|`` for a (not necessarily normalized) nonzero vector."""
    psi = np.asarray(psi, dtype=np.complex128).ravel()
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise UncertaintyError("state vector is zero")
    psi = psi / norm
    return make_density_matrix(np.outer(psi, psi.conj()))


def basis_projector(d: int, index: int = 0) -> DensityMatrix:
    e = np.zeros(d)
    e[index] = 1.0
    return pure_state(e)


def diagonal_state(p: DistributionLike) -> DensityMatrix:
    return make_density_matrix(np.diag(as_distribution(p).probs))


def eigen_hermitian(rho: MatrixLike) -> Spectrum:
    """Jacobi spectrum of a density matrix (or any Hermitian array)."""
    if isinstance(rho, DensityMatrix):
        return rho.spectrum
    return jacobi_eigh(rho)


def matrix_sqrt(rho: MatrixLike) -> np.ndarray:
    """Principal square root ``V diag(sqrt(w)) V^H``."""
    data = rho.data if isinstance(rho, DensityMatrix) else np.asarray(rho)
    return psd_power(data, 0.5)


def von_neumann_entropy(rho: MatrixLike) -> float:
    """``-tr rho log2 rho``, i.e. the Shannon entropy of the spectrum."""
    w = as_density_matrix(rho).eigenvalues
    w = w[w > 0]
    return float(-np.sum(w * np.log2(w))) + 0.0


# -- distances ----------------------------------------------------------------

class QFamily(enum.Enum):
    BURES = "bures"
    QHELLINGER = "qhellinger"
    SCHATTEN = "schatten"
    ENTRYWISE_LP = "lp"
    HILBERT_SCHMIDT = "hs"
    GEN_RENYI = "gen-renyi"
    GEN_TSALLIS = "gen-tsallis"


SPECTRAL_FAMILIES = (QFamily.BURES, QFamily.QHELLINGER, QFamily.SCHATTEN,
                     QFamily.HILBERT_SCHMIDT, QFamily.GEN_RENYI, QFamily.GEN_TSALLIS)


@dataclass(frozen=True)
class QDistanceSpec:
    """Quantum distance family and its parameter (p, alpha or beta)."""

    family: QFamily
    param: Optional[float] = None

    def __post_init__(self):
        fam, a = self.family, self.param
        needs = fam in (QFamily.SCHATTEN, QFamily.ENTRYWISE_LP, QFamily.GEN_RENYI,
                        QFamily.GEN_TSALLIS)
        if needs and (a is None or not math.isfinite(a)):
            raise UncertaintyError(f"{fam.value} needs a finite parameter")
        if not needs and a is not None:
            raise UncertaintyError(f"{fam.value} takes no parameter")
        if needs:
            object.__setattr__(self, "param", float(a))
            a = self.param
        if fam in (QFamily.SCHATTEN, QFamily.ENTRYWISE_LP) and a < 1:
            raise UncertaintyError(f"norm order must be >= 1, got {a}")
        if fam is QFamily.GEN_RENYI and a <= 0:
            raise UncertaintyError(f"generalized Renyi order must be > 0, got {a}")
        if fam is QFamily.GEN_TSALLIS and a <= 0:
            raise UncertaintyError(f"generalized Tsallis order must be > 0, got {a}")

    @property
    def spectral(self) -> bool:
        return self.family in SPECTRAL_FAMILIES

    def label(self) -> str:
        if self.param is None:
            return self.family.value
        return f"{self.family.value}({self.param:g})"

    __str__ = label

    @classmethod
    def bures(cls):
        return cls(QFamily.BURES)

    @classmethod
    def qhellinger(cls):
        return cls(QFamily.QHELLINGER)

    @classmethod
    def schatten(cls, p):
        return cls(QFamily.SCHATTEN, p)

    @classmethod
    def entrywise(cls, p):
        return cls(QFamily.ENTRYWISE_LP, p)

    @classmethod
    def hilbert_schmidt(cls):
        return cls(QFamily.HILBERT_SCHMIDT)

    @classmethod
    def gen_renyi(cls, alpha):
        return cls(QFamily.GEN_RENYI, alpha)

    @classmethod
    def gen_tsallis(cls, beta):
        return cls(QFamily.GEN_TSALLIS, beta)


def fidelity(rho: MatrixLike, sigma: MatrixLike) -> float:
    """Root fidelity ``tr sqrt(sqrt(rho) sigma sqrt(rho))`` (not squared)."""
    r, s = as_density_matrix(rho), as_density_matrix(sigma)
    sr = matrix_sqrt(r)
    m = sr @ s.data @ sr
    w = clean_eigenvalues(jacobi_eigh(0.5 * (m + m.conj().T)).eigenvalues)
    return float(np.sum(np.sqrt(np.clip(w, 0.0, None))))


def affinity(rho: MatrixLike, sigma: MatrixLike) -> float:
    """``tr sqrt(rho) sqrt(sigma)``."""
    r, s = as_density_matrix(rho), as_density_matrix(sigma)
    return float(np.trace(matrix_sqrt(r) @ matrix_sqrt(s)).real)


def _supported_in(rho: DensityMatrix, sigma: DensityMatrix) -> bool:
    """True when the support of rho lies inside the support of sigma."""
    spec = sigma.spectrum
    kernel = clean_eigenvalues(spec.eigenvalues) <= 0
    if not np.any(kernel):
        return True
    u = spec.eigenvectors[:, kernel]
    leak = np.real(np.einsum("ij,ik,kj->", u.conj(), rho.data, u))
    return leak <= SUPPORT_TOL


def relative_entropy(rho: MatrixLike, sigma: MatrixLike) -> float:
    """Umegaki relative entropy ``tr rho (log2 rho - log2 sigma)``."""
    r, s = as_density_matrix(rho), as_density_matrix(sigma)
    if not _supported_in(r, s):
        return math.inf
    lam = r.eigenvalues
    lam = lam[lam > 0]
    mu = clean_eigenvalues(s.spectrum.eigenvalues)
    u = s.spectrum.eigenvectors
    weights = np.real(np.einsum("ij,ik,kj->j", u.conj(), r.data, u))
    pos = mu > 0
    cross = float(np.sum(weights[pos] * np.log2(mu[pos])))
    return float(np.sum(lam * np.log2(lam))) - cross


def _check_pair(rho, sigma):
    r, s = as_density_matrix(rho), as_density_matrix(sigma)
    if r.dim != s.dim:
        raise DimensionMismatchError(f"dimensions differ: {r.dim} vs {s.dim}")
    return r, s


def quantum_distance(spec: QDistanceSpec, rho: MatrixLike, sigma: MatrixLike) -> float:
    """Distance ``D(rho || sigma)`` for the family selected by ``spec``.

    Generalized Renyi uses the sandwiched form
    ``log2 tr (sigma^s rho sigma^s)^alpha / (alpha - 1)`` with
    ``s = (1 - alpha)/(2 alpha)``; generalized Tsallis uses
    ``(tr rho^beta sigma^(1-beta) - 1)/(beta - 1)``. Both fall back to the
    Umegaki relative entropy at order 1. Infinite values are returned, not raised.

    Raises:
        DimensionMismatchError: ``rho`` and ``sigma`` have different sizes.
        OrthogonalStatesError: generalized Renyi with ``alpha > 1`` and ``tr rho sigma = 0``.
    """
    r, s = _check_pair(rho, sigma)
    fam, a = spec.family, spec.param
    if fam is QFamily.BURES:
        return 2.0 - 2.0 * fidelity(r, s)
    if fam is QFamily.QHELLINGER:
        return 2.0 - 2.0 * affinity(r, s)
    diff = r.data - s.data
    if fam is QFamily.SCHATTEN:
        w = np.abs(jacobi_eigh(diff).eigenvalues)
        return float(np.sum(w ** a) ** (1.0 / a))
    if fam is QFamily.ENTRYWISE_LP:
        return float(np.sum(np.abs(diff) ** a) ** (1.0 / a))
    if fam is QFamily.HILBERT_SCHMIDT:
        return float(np.sum(np.abs(diff) ** 2))
    if a == 1:
        return relative_entropy(r, s)
    if fam is QFamily.GEN_RENYI:
        if a > 1:
            if abs(np.trace(r.data @ s.data).real) <= ORTHOGONAL_TOL:
                raise OrthogonalStatesError("rho is orthogonal to sigma")
            if not _supported_in(r, s):
                return math.inf
        half = psd_power(s.data, (1.0 - a) / (2.0 * a))
        m = half @ r.data @ half
        w = clean_eigenvalues(jacobi_eigh(0.5 * (m + m.conj().T)).eigenvalues)
        total = float(np.sum(np.where(w > 0, np.clip(w, 0.0, None) ** a, 0.0)))
        if total == 0.0:
            return math.inf
        return math.log2(total) / (a - 1.0)
    # GEN_TSALLIS
    if a > 1 and not _supported_in(r, s):
        return math.inf
    overlap = np.trace(psd_power(r.data, a) @ psd_power(s.data, 1.0 - a)).real
    return float((overlap - 1.0) / (a - 1.0))


def induced_quantum_uncertainty(spec: QDistanceSpec, rho: MatrixLike,
                                reference: Optional[MatrixLike] = None) -> float:
    """``D(pure || I/d) - D(rho || I/d)`` evaluated with the distance itself.

    ``reference`` is the pure state of the first term, ``|0><0|`` by default.
    """
    r = as_density_matrix(rho)
    d = r.dim
    ref = basis_projector(d, 0) if reference is None else as_density_matrix(reference)
    if ref.dim != d:
        raise DimensionMismatchError(f"reference has dimension {ref.dim}, expected {d}")
    mixed = maximally_mixed(d)
    return quantum_distance(spec, ref, mixed) - quantum_distance(spec, r, mixed)


def quantum_closed_form(spec: QDistanceSpec, rho: MatrixLike) -> float:
    """Closed form of the induced mixedness measure.

    Spectral for every family except the entrywise l_p norm, which depends on
    the basis and is evaluated from the matrix entries.
    """
    r = as_density_matrix(rho)
    d = r.dim
    fam, a = spec.family, spec.param
    lam = r.eigenvalues
    if fam in (QFamily.BURES, QFamily.QHELLINGER):
        return float(2.0 / math.sqrt(d) * (np.sum(np.sqrt(lam)) - 1.0))
    if fam is QFamily.SCHATTEN:
        const = ((d - 1) ** a + d - 1) ** (1.0 / a) / d
        return float(const - np.sum(np.abs(lam - 1.0 / d) ** a) ** (1.0 / a))
    if fam is QFamily.ENTRYWISE_LP:
        const = ((d - 1) ** a + d - 1) ** (1.0 / a) / d
        diff = r.data - np.eye(d) / d
        return float(const - np.sum(np.abs(diff) ** a) ** (1.0 / a))
    if fam is QFamily.HILBERT_SCHMIDT:
        return float(1.0 - np.sum(lam ** 2))
    if a == 1:
        return von_neumann_entropy(r)
    pw = float(np.sum(lam[lam > 0] ** a))
    if fam is QFamily.GEN_RENYI:
        return float(math.log2(pw) / (1.0 - a))
    return float(d ** (a - 1.0) * (1.0 - pw) / (a - 1.0))


def quantum_max_value(spec: QDistanceSpec, d: int) -> float:
    """Induced uncertainty of the maximally mixed state."""
    return induced_quantum_uncertainty(spec, maximally_mixed(d))


# -- random states ------------------------------------------------------------

def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_unitary(d: int, seed) -> np.ndarray:
    """Unitary from orthonormalized complex Gaussian columns."""
    rng = _rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return gram_schmidt(g)


def random_density_matrix(d: int, rank: int, seed) -> DensityMatrix:
    """Mixture of ``rank`` orthonormal random pure states with simplex-random weights."""
    if d < 1:
        raise UncertaintyError("dimension must be positive")
    if not 1 <= rank <= d:
        raise UncertaintyError(f"rank must be in [1, {d}], got {rank}")
    rng = _rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    vecs = gram_schmidt(g)
    weights = random_simplex(rank, 1, rng)[0]
    # keep weights safely above the rank threshold
    weights = np.maximum(weights, 1e-6)
    weights /= weights.sum()
    return make_density_matrix((vecs * weights) @ vecs.conj().T)


def random_diagonal_state(d: int, seed) -> DensityMatrix:
    rng = _rng(seed)
    return make_density_matrix(np.diag(random_simplex(d, 1, rng)[0]))


def rotate(rho: MatrixLike, unitary: np.ndarray) -> DensityMatrix:
    """``W rho W^H``."""
    r = as_density_matrix(rho)
    return make_density_matrix(unitary @ r.data @ unitary.conj().T)


# -- text format ----------------------------------------------------------------

def format_density_matrix(rho: MatrixLike) -> str:
    """Line 1 is ``d``; then ``d`` rows of ``re:im`` pairs with 17 significant digits."""
    r = as_density_matrix(rho)
    lines = [str(r.dim)]
    for row in r.data:
        lines.append(" ".join(f"{z.real:.17g}:{z.imag:.17g}" for z in row))
    return "\n".join(lines) + "\n"


def parse_density_matrix(text: str) -> DensityMatrix:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise UncertaintyError("empty density-matrix file")
    try:
        d = int(rows[0][0])
    except ValueError:
        raise UncertaintyError(f"first line must be the dimension, got {rows[0]!r}") from None
    if len(rows[0]) != 1 or d < 1:
        raise UncertaintyError("first line must hold a single positive dimension")
    body = rows[1:]
    if len(body) != d or any(len(r) != d for r in body):
        raise UncertaintyError(f"expected {d} rows of {d} entries")
    out = np.empty((d, d), dtype=np.complex128)
    for i, row in enumerate(body):
        for j, tok in enumerate(row):
            re, sep, im = tok.partition(":")
            try:
                out[i, j] = complex(float(re), float(im) if sep else 0.0)
            except ValueError:
                raise UncertaintyError(f"bad entry {tok!r} at row {i + 1}") from None
    return make_density_matrix(out)


def read_density_matrix(path) -> DensityMatrix:
    return parse_density_matrix(Path(path).read_text())


def write_density_matrix(rho: MatrixLike, path) -> None:
    Path(path).write_text(format_density_matrix(rho))
