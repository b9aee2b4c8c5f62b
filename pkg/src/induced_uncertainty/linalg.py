"""Hermitian eigendecomposition by cyclic complex Jacobi rotations.

Only numpy arrays are used for storage; no LAPACK routine is called. The
solver targets the small matrices (d <= 64) that show up in density-matrix
work, where O(d**3) per sweep is negligible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import NoConvergenceError, NotHermitianError

OFF_TOL = 1e-14
MAX_SWEEPS = 100
HERMITIAN_TOL = 1e-10
# Eigenvalues this close to zero (relative to the spectral radius) are
# rounding residue of an exact zero; fractional powers would amplify them.
SNAP_TOL = 1e-14
CLAMP_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return math.sqrt(float(np.sum(off.real ** 2 + off.imag ** 2)))


def jacobi_eigh(a, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Diagonalize a Hermitian matrix with cyclic Jacobi sweeps.

    Each sweep visits every pair ``p < q`` once. A complex rotation first
    removes the phase of ``a[p, q]`` and then applies the real Givens rotation
    that zeros it. Sweeps stop when the off-diagonal Frobenius mass falls
    below ``tol * max(1, ||a||_F)``.

    Raises:
        NotHermitianError: ``a`` is not square or not Hermitian to 1e-10.
        NoConvergenceError: the tolerance is not met after ``max_sweeps``.
    """
    a = np.array(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotHermitianError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.conj().T), initial=0.0) > HERMITIAN_TOL:
        raise NotHermitianError("matrix is not Hermitian")
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    scale = max(1.0, math.sqrt(float(np.sum(np.abs(a) ** 2))))
    threshold = tol * scale

    sweeps = 0
    while _off_norm(a) >= threshold:
        if sweeps >= max_sweeps:
            raise NoConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                phase = apq / mag
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ph = phase.conjugate()
                # J = [[c, s], [-s*ph, c*ph]] on columns p, q; then J^H on rows
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * ph * col_q
                a[:, q] = s * col_p + c * ph * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * row_p + c * phase * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * ph * vq
                v[:, q] = s * vp + c * ph * vq

    w = np.diag(a).real.copy()
    order = np.argsort(-w, kind="stable")
    return Spectrum(w[order], v[:, order], sweeps)


def clean_eigenvalues(w: np.ndarray) -> np.ndarray:
    """Clamp small negatives and snap rounding-level eigenvalues to exactly zero."""
    radius = max(1.0, float(np.max(np.abs(w), initial=0.0)))
    w = np.where(np.abs(w) <= SNAP_TOL * radius, 0.0, w)
    return np.where((w < 0) & (w >= -CLAMP_TOL), 0.0, w)


def hermitian_function(a, func) -> np.ndarray:
    """``V diag(func(w)) V^H`` for the Jacobi spectrum ``w, V`` of ``a``."""
    spec = jacobi_eigh(a)
    v = spec.eigenvectors
    return (v * func(spec.eigenvalues)) @ v.conj().T


def psd_power(a, exponent: float) -> np.ndarray:
    """Fractional power of a PSD matrix, taken on its support (``0**x = 0``)."""
    spec = jacobi_eigh(a)
    w = clean_eigenvalues(spec.eigenvalues)
    pos = w > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        fw = np.where(pos, np.where(pos, w, 1.0) ** exponent, 0.0)
    v = spec.eigenvectors
    return (v * fw) @ v.conj().T


def gram_schmidt(m: np.ndarray) -> np.ndarray:
    """Orthonormalize the columns of ``m`` (modified Gram-Schmidt, reorthogonalized once)."""
    q = np.array(m, dtype=np.complex128)
    cols = q.shape[1]
    for k in range(cols):
        scale = np.linalg.norm(q[:, k])
        for _ in range(2):
            for j in range(k):
                q[:, k] -= np.vdot(q[:, j], q[:, k]) * q[:, j]
        norm = np.linalg.norm(q[:, k])
        if norm <= 1e-12 * scale or norm == 0.0:
            raise ValueError("columns are linearly dependent")
        q[:, k] /= norm
    return q
