import math

import numpy as np
import pytest

from induced_uncertainty import quantum as q
from induced_uncertainty.distributions import make_distribution
from induced_uncertainty.exceptions import (
    DimensionMismatchError,
    NotHermitianError,
    NotPSDError,
    NotUnitTraceError,
    OrthogonalStatesError,
    UncertaintyError,
)
from induced_uncertainty.sweep import qubit_family
from induced_uncertainty.uncertainty import MeasureId, closed_form

S = q.QDistanceSpec
ALL_SPECS = [S.bures(), S.qhellinger(), S.schatten(1), S.schatten(2), S.schatten(3),
             S.entrywise(1), S.entrywise(2), S.hilbert_schmidt(), S.gen_renyi(0.5),
             S.gen_renyi(1.0), S.gen_renyi(2.0), S.gen_tsallis(0.5), S.gen_tsallis(1.0),
             S.gen_tsallis(2.0)]
SPECTRAL = [s for s in ALL_SPECS if s.spectral]
KET0 = np.array([1.0, 0.0])


# -- validation ---------------------------------------------------------------------

def test_make_density_matrix_examples():
    assert q.make_density_matrix(np.eye(2) / 2).dim == 2
    rho = q.make_density_matrix([[0.75, 0.25], [0.25, 0.25]])
    assert np.allclose(rho.eigenvalues, [(1 + math.sqrt(0.5)) / 2, (1 - math.sqrt(0.5)) / 2], atol=1e-12)
    with pytest.raises(NotUnitTraceError):
        q.make_density_matrix([[1, 0], [0, 0.1]])


def test_make_density_matrix_errors():
    with pytest.raises(NotHermitianError):
        q.make_density_matrix([[0.5, 0.1], [0.2, 0.5]])
    with pytest.raises(NotHermitianError):
        q.make_density_matrix(np.ones((2, 3)))
    with pytest.raises(NotPSDError):
        q.make_density_matrix([[1.2, 0.0], [0.0, -0.2]])
    # rounding-level negatives are accepted and clamped
    rho = q.make_density_matrix([[1.0 + 5e-10, 0.0], [0.0, -5e-10]])
    assert rho.eigenvalues[-1] == 0.0


def test_density_matrix_is_read_only():
    rho = q.maximally_mixed(2)
    with pytest.raises(ValueError):
        rho.data[0, 0] = 1.0


# -- spectra and square roots --------------------------------------------------------

def test_eigen_hermitian_examples():
    for d in (2, 3, 5):
        assert np.allclose(q.eigen_hermitian(q.maximally_mixed(d)).eigenvalues, 1 / d)
    w = q.eigen_hermitian(q.make_density_matrix([[0.75, 0.25], [0.25, 0.25]])).eigenvalues
    assert np.allclose(w, [0.853553390593, 0.146446609407], atol=1e-10)
    psi = q.pure_state([1, 1j, -1, 2])
    assert np.allclose(psi.eigenvalues, [1, 0, 0, 0], atol=1e-12)
    assert psi.rank == 1


def test_matrix_sqrt_examples():
    assert np.allclose(q.matrix_sqrt(q.maximally_mixed(4)), np.eye(4) / 2, atol=1e-14)
    r = q.matrix_sqrt(q.diagonal_state([0.9, 0.1]))
    assert np.allclose(r, np.diag([0.948683298050514, 0.316227766016838]), atol=1e-12)
    p = q.pure_state([1, 2j, 3])
    assert np.allclose(q.matrix_sqrt(p), p.data, atol=1e-12)


def test_matrix_sqrt_squares_back(rng):
    for d in range(2, 9):
        for rank in (1, d):
            rho = q.random_density_matrix(d, rank, rng)
            r = q.matrix_sqrt(rho)
            assert np.max(np.abs(r @ r - rho.data)) <= 1e-8


# -- distances -----------------------------------------------------------------------

@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_distance_is_zero_on_the_diagonal(spec, rng):
    for d in (2, 3, 4):
        rho = q.random_density_matrix(d, d, rng)
        assert abs(q.quantum_distance(spec, rho, rho)) <= 1e-9


def test_distance_examples():
    pure, mixed = q.basis_projector(2), q.maximally_mixed(2)
    assert q.quantum_distance(S.hilbert_schmidt(), pure, mixed) == pytest.approx(0.5, abs=1e-12)
    assert q.quantum_distance(S.gen_renyi(2.0), pure, mixed) == pytest.approx(1.0, abs=1e-12)
    for d in (2, 3, 5):
        pure, mixed = q.basis_projector(d), q.maximally_mixed(d)
        assert q.quantum_distance(S.gen_renyi(0.5), pure, mixed) == pytest.approx(math.log2(d), abs=1e-12)
        assert q.quantum_distance(S.hilbert_schmidt(), pure, mixed) == pytest.approx(1 - 1 / d, abs=1e-12)
        b = 2.0
        value = q.quantum_distance(S.gen_tsallis(b), pure, mixed)
        assert value == pytest.approx(-(1 / d ** (1 - b) - 1) / (1 - b), abs=1e-12)
        assert value > 0


def test_fidelity_and_affinity():
    a, b = q.basis_projector(2, 0), q.basis_projector(2, 1)
    assert q.fidelity(a, b) == pytest.approx(0.0, abs=1e-12)
    assert q.fidelity(a, a) == pytest.approx(1.0, abs=1e-12)
    assert q.fidelity(a, q.maximally_mixed(2)) == pytest.approx(math.sqrt(0.5), abs=1e-12)
    assert q.affinity(a, q.maximally_mixed(2)) == pytest.approx(math.sqrt(0.5), abs=1e-12)


def test_relative_entropy():
    rho = q.diagonal_state([0.75, 0.25])
    assert q.relative_entropy(rho, q.maximally_mixed(2)) == pytest.approx(1 - 0.811278124459, abs=1e-11)
    assert q.relative_entropy(q.maximally_mixed(2), q.basis_projector(2)) == math.inf


def test_orthogonal_states_rejected_for_large_renyi_order():
    a, b = q.basis_projector(2, 0), q.basis_projector(2, 1)
    with pytest.raises(OrthogonalStatesError):
        q.quantum_distance(S.gen_renyi(2.0), a, b)
    assert q.quantum_distance(S.gen_renyi(0.5), a, b) == math.inf


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        q.quantum_distance(S.hilbert_schmidt(), q.maximally_mixed(2), q.maximally_mixed(3))
    with pytest.raises(DimensionMismatchError):
        q.induced_quantum_uncertainty(S.bures(), q.maximally_mixed(2), q.basis_projector(3))


@pytest.mark.parametrize("make", [lambda: S.schatten(0.5), lambda: S.entrywise(None),
                                  lambda: S.gen_renyi(0.0), lambda: S.gen_tsallis(-1.0),
                                  lambda: S(q.QFamily.BURES, 2.0)])
def test_spec_validation(make):
    with pytest.raises(UncertaintyError):
        make()


# -- induced measures -----------------------------------------------------------------

def test_induced_examples_on_qubit_family():
    rho = qubit_family(0.5, KET0)
    assert q.induced_quantum_uncertainty(S.hilbert_schmidt(), rho) == pytest.approx(0.375, abs=1e-12)
    assert q.induced_quantum_uncertainty(S.schatten(1), rho) == pytest.approx(0.5, abs=1e-12)
    bures = q.induced_quantum_uncertainty(S.bures(), rho)
    assert bures == pytest.approx(math.sqrt(2) * (math.sqrt(0.75) + math.sqrt(0.25) - 1), abs=1e-12)
    assert bures == pytest.approx(0.517638, abs=1e-6)


@pytest.mark.parametrize("p", [0.0, 0.1, 0.37, 0.5, 0.9, 1.0])
def test_qubit_family_closed_forms(p):
    rho = qubit_family(p, KET0)
    assert q.induced_quantum_uncertainty(S.hilbert_schmidt(), rho) == pytest.approx((1 - p * p) / 2, abs=1e-12)
    assert q.induced_quantum_uncertainty(S.schatten(1), rho) == pytest.approx(1 - p, abs=1e-12)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_pure_states_have_zero_mixedness(spec, rng):
    for d in (2, 3, 4, 6):
        psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        ref = q.pure_state(psi)
        assert abs(q.induced_quantum_uncertainty(spec, ref, reference=ref)) <= 1e-9
        rho = q.random_density_matrix(d, 1, rng)
        if spec.spectral:
            assert abs(q.induced_quantum_uncertainty(spec, rho)) <= 1e-9


@pytest.mark.parametrize("spec", SPECTRAL, ids=lambda s: s.label())
def test_constant_term_is_unitarily_invariant(spec, rng):
    for d in (2, 3, 5):
        mixed = q.maximally_mixed(d)
        base = q.quantum_distance(spec, q.basis_projector(d), mixed)
        for _ in range(5):
            ref = q.random_density_matrix(d, 1, rng)
            assert q.quantum_distance(spec, ref, mixed) == pytest.approx(base, abs=1e-9)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_closed_form_matches_two_term_construction(spec, rng):
    for d in range(2, 7):
        for rank in (1, 2, d):
            rho = q.random_density_matrix(d, min(rank, d), rng)
            assert q.quantum_closed_form(spec, rho) == pytest.approx(
                q.induced_quantum_uncertainty(spec, rho), abs=1e-9)


def test_entrywise_l1_depends_on_basis(rng):
    spec = S.entrywise(1)
    rho = q.diagonal_state([0.7, 0.3])
    base = q.induced_quantum_uncertainty(spec, rho)
    gap = max(abs(q.induced_quantum_uncertainty(spec, q.rotate(rho, q.random_unitary(2, rng))) - base)
              for _ in range(20))
    assert gap > 1e-3


def test_entrywise_matches_schatten_on_diagonal_states(rng):
    for d in (2, 3, 4):
        rho = q.random_diagonal_state(d, rng)
        for p in (1, 2, 3):
            assert q.induced_quantum_uncertainty(S.entrywise(p), rho) == pytest.approx(
                q.induced_quantum_uncertainty(S.schatten(p), rho), abs=1e-9)


def test_reduces_to_classical_on_diagonal_states(rng):
    for d in range(2, 7):
        p = rng.dirichlet(np.ones(d))
        rho = q.diagonal_state(p)
        assert q.quantum_closed_form(S.gen_renyi(2.0), rho) == pytest.approx(
            closed_form(MeasureId.renyi(2.0), p), abs=1e-9)
        assert q.quantum_closed_form(S.gen_tsallis(3.0), rho) == pytest.approx(
            closed_form(MeasureId.tsallis(3.0), p), abs=1e-9)
        assert q.quantum_closed_form(S.bures(), rho) == pytest.approx(
            closed_form(MeasureId.hellinger(), p), abs=1e-9)
        assert q.quantum_closed_form(S.hilbert_schmidt(), rho) == pytest.approx(
            1 - np.sum(p ** 2), abs=1e-12)
        assert q.von_neumann_entropy(rho) == pytest.approx(closed_form(MeasureId.shannon(), p), abs=1e-12)


def test_max_value_is_at_maximally_mixed():
    assert q.quantum_max_value(S.hilbert_schmidt(), 2) == pytest.approx(0.5)
    assert q.quantum_max_value(S.gen_renyi(2.0), 4) == pytest.approx(2.0)
    assert q.quantum_max_value(S.bures(), 2) == pytest.approx(2 - math.sqrt(2))


# -- random states and file format ----------------------------------------------------

def test_random_density_matrix():
    rho = q.random_density_matrix(2, 1, seed=3)
    assert rho.rank == 1
    assert abs(q.induced_quantum_uncertainty(S.hilbert_schmidt(), rho)) <= 1e-12
    a, b = q.random_density_matrix(3, 3, seed=11), q.random_density_matrix(3, 3, seed=11)
    assert np.array_equal(a.data, b.data)
    assert a.rank == 3
    for rank in range(1, 6):
        assert q.random_density_matrix(5, rank, seed=rank).rank == rank
    with pytest.raises(UncertaintyError):
        q.random_density_matrix(2, 3, seed=0)
    with pytest.raises(UncertaintyError):
        q.random_density_matrix(2, 0, seed=0)


def test_random_unitary_is_unitary():
    w = q.random_unitary(6, seed=1)
    assert np.allclose(w.conj().T @ w, np.eye(6), atol=1e-13)


def test_file_round_trip(tmp_path, rng):
    rho = q.random_density_matrix(3, 2, rng)
    path = tmp_path / "rho.txt"
    q.write_density_matrix(rho, path)
    text = path.read_text()
    assert text.splitlines()[0] == "3"
    back = q.read_density_matrix(path)
    assert np.array_equal(back.data, rho.data)


def test_parse_density_matrix():
    rho = q.parse_density_matrix("2\n0.5:0 0:-0.25\n0:0.25 0.5:0\n")
    assert rho.data[0, 1] == -0.25j
    assert q.parse_density_matrix("# comment\n1\n1\n").dim == 1
    for bad in ("", "x\n", "2\n0.5 0\n", "2\n1:0 0:0\n0:0 a:0\n", "2 2\n1 0\n0 0\n"):
        with pytest.raises(UncertaintyError):
            q.parse_density_matrix(bad)
