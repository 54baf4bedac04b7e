import io
import json

import numpy as np
import pytest

from conftest import random_density, random_product_pure, random_unitary

from rfunc import (
    DensityMatrix,
    DimensionMismatchError,
    DomainError,
    NotHermitianError,
    NotPositiveError,
    StateValidationError,
    TraceError,
    dump_state,
    eof_lower_bound,
    isotropic_eof,
    isotropic_state,
    lambda_of_state,
    load_state,
    max_entangled_state,
    partial_transpose,
    realign,
    trace_norm,
    validate_state,
)


class TestValidateState:
    def test_maximally_mixed_ok(self):
        rho = validate_state(np.eye(4) / 4.0, (2, 2))
        assert rho.dims == (2, 2)
        assert rho.m == 2

    def test_trace_error(self):
        with pytest.raises(TraceError):
            validate_state(np.eye(4) / 8.0, (2, 2))

    def test_positivity_error(self):
        with pytest.raises(NotPositiveError):
            validate_state(np.diag([1.0, -0.1, 0.05, 0.05]), (2, 2))

    def test_hermiticity_error(self):
        mat = np.eye(4, dtype=complex) / 4.0
        mat[0, 1] = 0.5j
        with pytest.raises(NotHermitianError):
            validate_state(mat, (2, 2))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            validate_state(np.eye(4) / 4.0, (2, 3))

    def test_nonfinite_rejected(self):
        mat = np.eye(4, dtype=complex) / 4.0
        mat[2, 2] = np.nan
        with pytest.raises(StateValidationError):
            validate_state(mat, (2, 2))

    def test_tiny_negative_eigenvalue_tolerated(self):
        mat = np.diag([0.5, 0.5 + 1e-12, -1e-12, 0.0])
        assert validate_state(mat, (2, 2)).m == 2


class TestPartialTranspose:
    def test_involution(self):
        rng = np.random.default_rng(7)
        rho = validate_state(random_density(rng, 2, 3), (2, 3))
        pt = DensityMatrix((2, 3), partial_transpose(rho))
        assert np.array_equal(partial_transpose(pt), rho.matrix)

    def test_preserves_trace_and_hermiticity(self):
        rng = np.random.default_rng(8)
        rho = validate_state(random_density(rng, 3, 3), (3, 3))
        pt = partial_transpose(rho)
        assert abs(np.trace(pt).real - 1.0) < 1e-12
        assert np.max(np.abs(pt - pt.conj().T)) < 1e-12

    def test_product_state(self):
        rng = np.random.default_rng(9)
        a = random_density(rng, 1, 2)
        b = random_density(rng, 1, 3)
        rho = validate_state(np.kron(a, b), (2, 3))
        assert np.allclose(partial_transpose(rho), np.kron(a, b.T), atol=1e-14)

    def test_max_entangled_eigenvalues(self):
        evals = np.linalg.eigvalsh(partial_transpose(max_entangled_state(2)))
        assert np.allclose(np.sort(evals), [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


class TestRealign:
    def test_shape(self):
        rng = np.random.default_rng(10)
        rho = validate_state(random_density(rng, 2, 3), (2, 3))
        assert realign(rho).shape == (4, 9)

    def test_maximally_mixed(self):
        rho = validate_state(np.eye(4) / 4.0, (2, 2))
        svals = np.linalg.svd(realign(rho), compute_uv=False)
        assert np.allclose(np.sort(svals), [0.0, 0.0, 0.0, 0.5], atol=1e-12)
        assert trace_norm(realign(rho)) == pytest.approx(0.5, abs=1e-12)

    def test_max_entangled(self):
        assert trace_norm(realign(max_entangled_state(2))) == pytest.approx(
            2.0, abs=1e-12)

    def test_product_pure_states_have_unit_norms(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            rho = validate_state(random_product_pure(rng, 2, 3), (2, 3))
            assert trace_norm(realign(rho)) == pytest.approx(1.0, abs=1e-9)
            assert trace_norm(partial_transpose(rho)) == pytest.approx(
                1.0, abs=1e-9)


class TestTraceNorm:
    def test_identity(self):
        assert trace_norm(np.eye(5)) == pytest.approx(5.0, abs=1e-12)

    def test_sign_indefinite_diagonal(self):
        assert trace_norm(np.diag([1.0, -1.0])) == pytest.approx(2.0, abs=1e-14)

    def test_unitary_invariance(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            mat = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
            u = random_unitary(rng, 6)
            assert trace_norm(u @ mat) == pytest.approx(trace_norm(mat),
                                                        abs=1e-9)

    def test_triangle_inequality(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
            b = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
            assert trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-9

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            trace_norm(np.array([[np.inf, 0.0], [0.0, 1.0]]))


class TestLambdaOfState:
    def test_max_entangled(self):
        for d in (2, 3, 4):
            est = lambda_of_state(max_entangled_state(d))
            assert est.ppt_norm == pytest.approx(d, abs=1e-9)
            assert est.ccnr_norm == pytest.approx(d, abs=1e-9)
            assert est.lam == pytest.approx(d, abs=1e-9)

    def test_product_pure(self):
        rng = np.random.default_rng(14)
        rho = validate_state(random_product_pure(rng, 3, 3), (3, 3))
        assert lambda_of_state(rho).lam == pytest.approx(1.0, abs=1e-9)

    def test_maximally_mixed_clamped(self):
        rho = validate_state(np.eye(4) / 4.0, (2, 2))
        est = lambda_of_state(rho)
        assert est.ccnr_norm < 1.0
        assert est.lam == 1.0


class TestIsotropicEof:
    def test_qubit_maximal(self):
        assert isotropic_eof(2, 1.0) == pytest.approx(1.0, abs=1e-12)

    def test_separability_boundary(self):
        assert isotropic_eof(3, 1.0 / 3.0) == 0.0

    def test_below_boundary(self):
        assert isotropic_eof(3, 0.2) == 0.0

    def test_d3_on_linear_piece(self):
        # 3 * 0.95 = 2.85 > lambda* = 8/3, so the value sits on the line
        from rfunc import find_tangent
        desc = find_tangent(3)
        lam = 3 * 0.95
        expected = desc.value_at_star + desc.slope * (lam - desc.lambda_star)
        assert isotropic_eof(3, 0.95) == pytest.approx(expected, abs=1e-12)

    def test_fidelity_domain(self):
        with pytest.raises(DomainError):
            isotropic_eof(3, 1.2)


class TestEofLowerBound:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_max_entangled(self, d):
        assert eof_lower_bound(max_entangled_state(d)) == pytest.approx(
            np.log2(d), abs=1e-9)

    def test_separable_mixtures_give_zero(self):
        rng = np.random.default_rng(15)
        for _ in range(20):
            parts = [random_product_pure(rng, 2, 2) for _ in range(4)]
            weights = rng.dirichlet(np.ones(4))
            rho = validate_state(sum(w * p for w, p in zip(weights, parts)),
                                 (2, 2))
            assert eof_lower_bound(rho) <= 1e-9

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(16)
        for m, n in ((2, 2), (3, 3)):
            for _ in range(50):
                rho = validate_state(random_density(rng, m, n), (m, n))
                u, v = random_unitary(rng, m), random_unitary(rng, n)
                w = np.kron(u, v)
                rotated = validate_state(w @ rho.matrix @ w.conj().T, (m, n))
                assert eof_lower_bound(rotated) == pytest.approx(
                    eof_lower_bound(rho), abs=1e-8)

    @pytest.mark.parametrize("d", [2, 3, 4])
    @pytest.mark.parametrize("fid", [0.4, 0.6, 0.8, 1.0])
    def test_tight_on_isotropic_states(self, d, fid):
        assert eof_lower_bound(isotropic_state(d, fid)) == pytest.approx(
            isotropic_eof(d, fid), abs=1e-8)

    def test_never_exceeds_exact_isotropic_value(self):
        for fid in np.linspace(0.0, 1.0, 21):
            bound = eof_lower_bound(isotropic_state(2, fid))
            assert bound <= isotropic_eof(2, fid) + 1e-9


class TestStateFileFormat:
    def test_round_trip(self):
        rng = np.random.default_rng(17)
        rho = validate_state(random_density(rng, 2, 3), (2, 3))
        buf = io.StringIO()
        dump_state(rho, buf)
        buf.seek(0)
        loaded = load_state(buf)
        assert loaded.dims == (2, 3)
        assert np.allclose(loaded.matrix, rho.matrix, atol=1e-15)

    def _load(self, doc):
        return load_state(io.StringIO(json.dumps(doc)))

    def test_missing_keys(self):
        with pytest.raises(StateValidationError):
            self._load({"dims": [2, 2]})

    def test_bad_dims(self):
        with pytest.raises(DimensionMismatchError):
            self._load({"dims": [2.5, 2], "matrix": []})

    def test_ragged_rows(self):
        rows = [[[0.25, 0.0]] * 4 for _ in range(4)]
        rows[2] = rows[2][:3]
        with pytest.raises(DimensionMismatchError):
            self._load({"dims": [2, 2], "matrix": rows})

    def test_nonfinite_entry(self):
        rows = [[[0.25 if i == j else 0.0, 0.0] for j in range(4)]
                for i in range(4)]
        rows[0][0] = [float("inf"), 0.0]  # serialized as Infinity
        doc = json.dumps({"dims": [2, 2], "matrix": rows})
        with pytest.raises(StateValidationError):
            load_state(io.StringIO(doc))

    def test_entry_not_a_pair(self):
        rows = [[[0.25, 0.0]] * 4 for _ in range(4)]
        rows[1][1] = [0.25]
        with pytest.raises(StateValidationError):
            self._load({"dims": [2, 2], "matrix": rows})
