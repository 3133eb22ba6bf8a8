import numpy as np
import pytest

from entfluct import (
    Observable,
    StateVector,
    canonical_form,
    expectation,
    expectation_vector,
    fluctuation_report,
    is_completely_entangled,
    rotate_basis,
    spin_generators,
    to_cartesian,
    total_variance,
    variance_concurrence,
)
from entfluct.spin1 import cartesian_spin_generators
from util import random_orthogonal, random_orthonormal_pair, random_state, state_from_canonical

SQ2 = np.sqrt(2.0)
SPIN1 = spin_generators(1)


def sph(components):
    return StateVector.from_components(components, "spherical")


class TestExpectation:
    def test_sz_eigenstate(self):
        assert expectation(sph([1, 0, 0]), SPIN1.elements[2]) == pytest.approx(1.0)

    def test_sx_on_m0(self):
        assert expectation(sph([0, 1, 0]), SPIN1.elements[0]) == pytest.approx(0.0, abs=1e-14)

    def test_sz_on_symmetric_superposition(self):
        psi = sph([1 / SQ2, 0, 1 / SQ2])
        assert expectation(psi, SPIN1.elements[2]) == pytest.approx(0.0, abs=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            expectation(StateVector([1, 0], "qubit-pair"), SPIN1.elements[0])

    def test_vector_examples(self):
        assert np.allclose(expectation_vector(sph([0, 1, 0]), SPIN1), [0, 0, 0], atol=1e-14)
        assert np.allclose(expectation_vector(sph([1, 0, 0]), SPIN1), [0, 0, 1], atol=1e-14)

    def test_canonical_magnitude_is_sin_2phi(self):
        rng = np.random.default_rng(11)
        basis = cartesian_spin_generators()
        for phi in np.linspace(0.0, np.pi / 4, 9):
            mu, nu = random_orthonormal_pair(rng)
            psi = state_from_canonical(0.3, phi, mu, nu)
            mag = np.linalg.norm(expectation_vector(psi, basis))
            assert mag == pytest.approx(np.sin(2 * phi), abs=1e-10)


class TestTotalVariance:
    def test_m0(self):
        assert total_variance(sph([0, 1, 0]), SPIN1) == pytest.approx(2.0, abs=1e-12)

    def test_m_plus1(self):
        assert total_variance(sph([1, 0, 0]), SPIN1) == pytest.approx(1.0, abs=1e-12)

    def test_every_half_spin_state(self):
        rng = np.random.default_rng(3)
        half = spin_generators(0.5)
        for _ in range(25):
            psi = random_state(rng, 2)
            assert total_variance(psi, half) == pytest.approx(0.5, abs=1e-12)

    def test_basis_rotation_invariance(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            psi = random_state(rng, 3)
            rotated = rotate_basis(SPIN1, random_orthogonal(rng))
            assert abs(total_variance(psi, SPIN1) - total_variance(psi, rotated)) < 1e-10

    @pytest.mark.parametrize("j", [0.5, 1, 1.5])
    def test_irreducibility_identity(self, j):
        rng = np.random.default_rng(int(2 * j))
        basis = spin_generators(j)
        for _ in range(10):
            psi = random_state(rng, basis.dim)
            v = total_variance(psi, basis)
            mag2 = np.sum(expectation_vector(psi, basis) ** 2)
            assert abs(v - (j * (j + 1) - mag2)) < 1e-10

    def test_global_phase_invariance(self):
        rng = np.random.default_rng(5)
        psi = random_state(rng, 3)
        shifted = StateVector(np.exp(0.7j) * psi.amplitudes, "spherical")
        assert abs(total_variance(psi, SPIN1) - total_variance(shifted, SPIN1)) < 1e-12


class TestCompletelyEntangled:
    def test_m0_is_ce(self):
        flag, residual = is_completely_entangled(sph([0, 1, 0]), SPIN1, 1e-10)
        assert flag and residual < 1e-14

    def test_m_plus1_is_not(self):
        flag, residual = is_completely_entangled(sph([1, 0, 0]), SPIN1, 1e-10)
        assert not flag
        assert residual == pytest.approx(1.0)

    def test_symmetric_superposition_is_ce(self):
        flag, _ = is_completely_entangled(sph([1 / SQ2, 0, 1 / SQ2]), SPIN1, 1e-10)
        assert flag

    def test_flag_matches_vector_magnitude(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            psi = random_state(rng, 3)
            flag, residual = is_completely_entangled(psi, SPIN1, 1e-3)
            assert flag == (residual <= 1e-3)
            assert residual == pytest.approx(
                np.max(np.abs(expectation_vector(psi, SPIN1))), abs=1e-15
            )

    def test_rejects_bad_tol(self):
        with pytest.raises(ValueError):
            is_completely_entangled(sph([0, 1, 0]), SPIN1, 0.0)


class TestVarianceConcurrence:
    def test_m0(self):
        assert variance_concurrence(sph([0, 1, 0]), SPIN1, 1.0, 2.0) == pytest.approx(1.0)

    def test_m_plus1(self):
        assert variance_concurrence(sph([1, 0, 0]), SPIN1, 1.0, 2.0) == pytest.approx(0.0, abs=1e-7)

    def test_matches_cos_2phi(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            psi = random_state(rng, 3)
            c = variance_concurrence(psi, SPIN1, 1.0, 2.0)
            phi = canonical_form(to_cartesian(psi)).phi
            assert c == pytest.approx(abs(np.cos(2 * phi)), abs=1e-9)

    def test_rejects_inverted_bounds(self):
        with pytest.raises(ValueError):
            variance_concurrence(sph([0, 1, 0]), SPIN1, 2.0, 1.0)

    def test_rejects_inconsistent_bounds(self):
        with pytest.raises(ValueError):
            variance_concurrence(sph([0, 1, 0]), SPIN1, 3.0, 4.0)


class TestReport:
    def test_full_report(self):
        report = fluctuation_report(sph([0, 1, 0]), SPIN1, 1.0, 2.0)
        assert report.v_tot == pytest.approx(2.0, abs=1e-12)
        assert report.ce_flag
        assert report.ce_residual < 1e-12
        assert report.concurrence_variance == pytest.approx(1.0)
        assert np.allclose(report.expectations, 0.0, atol=1e-14)

    def test_report_without_bounds(self):
        report = fluctuation_report(sph([1, 0, 0]), SPIN1)
        assert report.concurrence_variance is None
        assert report.v_min is None and report.v_max is None

    def test_non_hermitian_leakage_rejected(self):
        # bypass the Observable check by corrupting entries after the fact
        obs = Observable(np.eye(3))
        object.__setattr__(obs, "entries", np.array([[0, 1j, 0], [0, 0, 0], [0, 0, 0]]))
        with pytest.raises(ValueError):
            expectation(sph([1 / SQ2, 1 / SQ2, 0]), obs)
