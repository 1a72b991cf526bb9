"""Core linear algebra: constructor invariants and the state/operator ops."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qparity import (
    DensityMatrix,
    StateVector,
    UnitaryOperator,
    apply,
    basis_state,
    compose,
    density_from_state,
    hadamard,
    hadamard_both,
    hadamard_first,
    identity,
    overlap,
    partial_trace,
    purity,
    states_equal,
    tensor_product,
)

INV_SQRT2 = 1.0 / np.sqrt(2.0)

# Rank-one projectors of (|00> + |01>)/sqrt(2) and (|01> - |10>)/sqrt(2),
# expanded by hand.
RHO_EVEN_PLUS = 0.5 * np.array(
    [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]], dtype=complex
)
RHO_ODD_MINUS = 0.5 * np.array(
    [[0, 0, 0, 0], [0, 1, -1, 0], [0, -1, 1, 0], [0, 0, 0, 0]], dtype=complex
)


def state(*amps) -> StateVector:
    return StateVector(np.array(amps, dtype=complex))


class TestStateVector:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="not normalized"):
            StateVector([1.0, 1.0])

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError, match="finite"):
            StateVector([np.nan, 0.0])
        with pytest.raises(ValueError, match="finite"):
            StateVector([complex(0, np.inf), 0.0])

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError, match="power of two"):
            StateVector([1.0, 0.0, 0.0])
        with pytest.raises(ValueError, match="power of two"):
            StateVector([1.0])

    def test_rejects_oversized_register(self):
        amps = np.zeros(2**13)
        amps[0] = 1.0
        with pytest.raises(ValueError, match="cap"):
            StateVector(amps)

    def test_amplitudes_are_read_only(self):
        s = basis_state("00")
        with pytest.raises(ValueError):
            s.amplitudes[0] = 0.0

    def test_basis_labels_order(self):
        assert basis_state("00").basis_labels() == ("00", "01", "10", "11")

    def test_basis_state_rejects_garbage(self):
        with pytest.raises(ValueError):
            basis_state("0x")
        with pytest.raises(ValueError):
            basis_state("")


class TestDensityMatrix:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix([[0.5, 0.5], [-0.5, 0.5]])

    def test_rejects_wrong_trace(self):
        with pytest.raises(ValueError, match="trace"):
            DensityMatrix([[1.0, 0.0], [0.0, 1.0]])

    def test_positive_semidefinite_check(self):
        assert DensityMatrix(np.eye(2) / 2).is_positive_semidefinite()
        # Hermitian, trace one, but with a negative eigenvalue.
        indefinite = DensityMatrix([[1.5, 0.0], [0.0, -0.5]])
        assert not indefinite.is_positive_semidefinite()


class TestUnitaryOperator:
    def test_rejects_non_unitary(self):
        with pytest.raises(ValueError, match="unitary"):
            UnitaryOperator([[1.0, 1.0], [0.0, 1.0]])

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            UnitaryOperator([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])

    def test_hadamard_is_self_inverse(self):
        h = hadamard()
        np.testing.assert_allclose(h.entries @ h.entries, np.eye(2), atol=1e-12)

    def test_library_operators_are_unitary(self):
        for op in (hadamard(), identity(), identity(2), hadamard_first(), hadamard_both()):
            defect = np.max(np.abs(op.entries.conj().T @ op.entries - np.eye(op.dim)))
            assert defect < 1e-12


class TestTensorProduct:
    def test_hadamard_with_identity(self):
        # Kronecker product expanded by hand: H acts on the most significant
        # qubit, so the 2x2 identity blocks are scaled by H's entries.
        expected = INV_SQRT2 * np.array(
            [[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, -1, 0], [0, 1, 0, -1]], dtype=complex
        )
        np.testing.assert_allclose(hadamard_first().entries, expected, atol=1e-12)

    def test_identity_with_identity(self):
        result = tensor_product(identity(), identity())
        np.testing.assert_allclose(result.entries, np.eye(4), atol=1e-12)

    def test_sign_diagonal_factors(self):
        a = UnitaryOperator(np.diag([1.0, -1.0]))
        b = UnitaryOperator(np.diag([1.0, 1.0]))
        result = tensor_product(a, b)
        np.testing.assert_allclose(
            np.diagonal(result.entries), [1, 1, -1, -1], atol=1e-12
        )

    @given(
        st.lists(
            st.tuples(st.sampled_from([1.0, -1.0]), st.sampled_from([1.0, -1.0])),
            min_size=3,
            max_size=3,
        )
    )
    def test_associative_on_sign_diagonals(self, diagonals):
        a, b, c = (UnitaryOperator(np.diag(list(d))) for d in diagonals)
        left = tensor_product(tensor_product(a, b), c)
        right = tensor_product(a, tensor_product(b, c))
        assert np.max(np.abs(left.entries - right.entries)) < 1e-12


class TestApply:
    def test_hadamard_on_zero(self):
        result = apply(hadamard(), basis_state("0"))
        np.testing.assert_allclose(result.amplitudes, [INV_SQRT2, INV_SQRT2], atol=1e-12)

    def test_hadamard_on_one(self):
        result = apply(hadamard(), basis_state("1"))
        np.testing.assert_allclose(result.amplitudes, [INV_SQRT2, -INV_SQRT2], atol=1e-12)

    def test_identity_fixes_basis_state(self):
        result = apply(identity(2), basis_state("01"))
        np.testing.assert_allclose(result.amplitudes, [0, 1, 0, 0], atol=0)

    def test_hadamard_both_gives_uniform_superposition(self):
        result = apply(hadamard_both(), basis_state("00"))
        np.testing.assert_allclose(result.amplitudes, [0.5, 0.5, 0.5, 0.5], atol=1e-12)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError, match="qubits"):
            apply(hadamard(), basis_state("00"))

    def test_compose_applies_right_factor_first(self):
        h = hadamard()
        hh = compose(h, h)
        np.testing.assert_allclose(hh.entries, np.eye(2), atol=1e-12)
        with pytest.raises(ValueError, match="compose"):
            compose(h, identity(2))


class TestDensityFromState:
    def test_even_superposition_projector(self):
        rho = density_from_state(state(INV_SQRT2, INV_SQRT2, 0, 0))
        np.testing.assert_allclose(rho.entries, RHO_EVEN_PLUS, atol=1e-12)

    def test_basis_state_projector(self):
        rho = density_from_state(basis_state("00"))
        np.testing.assert_allclose(rho.entries, np.diag([1, 0, 0, 0]), atol=0)

    def test_odd_superposition_projector(self):
        rho = density_from_state(state(0, INV_SQRT2, -INV_SQRT2, 0))
        np.testing.assert_allclose(rho.entries, RHO_ODD_MINUS, atol=1e-12)

    def test_projector_is_idempotent(self):
        rho = density_from_state(state(0.5, 0.5, 0.5, 0.5)).entries
        np.testing.assert_allclose(rho @ rho, rho, atol=1e-11)


class TestPartialTrace:
    def test_even_reduced_second_qubit(self):
        reduced = partial_trace(DensityMatrix(RHO_EVEN_PLUS), 2)
        np.testing.assert_allclose(reduced.entries, 0.5 * np.array([[1, 1], [1, 1]]), atol=1e-12)

    def test_odd_reduced_second_qubit_is_maximally_mixed(self):
        reduced = partial_trace(DensityMatrix(RHO_ODD_MINUS), 2)
        np.testing.assert_allclose(reduced.entries, 0.5 * np.eye(2), atol=1e-12)

    def test_product_state_reduced_first_qubit(self):
        reduced = partial_trace(density_from_state(basis_state("01")), 1)
        np.testing.assert_allclose(reduced.entries, np.diag([1, 0]), atol=0)

    def test_invalid_qubit_index(self):
        rho = density_from_state(basis_state("00"))
        with pytest.raises(ValueError, match="keep_qubit"):
            partial_trace(rho, 3)
        with pytest.raises(ValueError, match="keep_qubit"):
            partial_trace(rho, 0)

    def test_requires_two_qubits(self):
        with pytest.raises(ValueError, match="two-qubit"):
            partial_trace(DensityMatrix(np.eye(2) / 2), 1)

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=50)
    def test_trace_preserved_on_random_states(self, seed):
        rng = np.random.default_rng(seed)
        raw = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        rho = density_from_state(StateVector(raw / np.linalg.norm(raw)))
        for qubit in (1, 2):
            trace = np.trace(partial_trace(rho, qubit).entries)
            assert abs(trace - 1.0) < 1e-12


class TestPurity:
    def test_maximally_mixed_qubit(self):
        assert purity(DensityMatrix(np.eye(2) / 2)) == pytest.approx(0.5, abs=1e-12)

    def test_pure_basis_state(self):
        assert purity(DensityMatrix(np.diag([1.0, 0.0]))) == pytest.approx(1.0, abs=1e-12)

    def test_even_reduced_state_is_pure(self):
        # The reduced matrix (1/2)[[1,1],[1,1]] squares to itself, so its
        # purity is its trace, which is 1.
        reduced = partial_trace(DensityMatrix(RHO_EVEN_PLUS), 2)
        assert purity(reduced) == pytest.approx(1.0, abs=1e-12)


class TestOverlap:
    def test_even_and_odd_circuit_outputs(self):
        # <(s*00 + 01)/sqrt2 | (t*10 + 01)/sqrt2> = 1/2 for any signs s, t:
        # only the shared |01> component survives.
        for s in (1, -1):
            for t in (1, -1):
                even = state(s * INV_SQRT2, INV_SQRT2, 0, 0)
                odd = state(0, INV_SQRT2, t * INV_SQRT2, 0)
                assert overlap(even, odd) == pytest.approx(0.5, abs=1e-12)

    def test_self_overlap_is_one(self):
        s = state(0.5, 0.5j, -0.5, 0.5j)
        assert overlap(s, s) == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal_basis_states(self):
        assert overlap(basis_state("00"), basis_state("11")) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="overlap"):
            overlap(basis_state("0"), basis_state("00"))

    def test_conjugates_left_argument(self):
        a = state(INV_SQRT2, 1j * INV_SQRT2)
        b = basis_state("1")
        assert overlap(a, b) == pytest.approx(-1j * INV_SQRT2, abs=1e-12)


class TestStatesEqual:
    def test_global_phase_ignored(self):
        s = state(0.5, 0.5, 0.5, 0.5)
        phase = np.exp(1j * 0.7)
        assert states_equal(s, StateVector(phase * s.amplitudes))

    def test_distinct_states_differ(self):
        assert not states_equal(basis_state("00"), basis_state("01"))
        assert not states_equal(basis_state("0"), basis_state("00"))


@given(st.integers(0, 2**32 - 1), st.integers(1, 10))
@settings(max_examples=60, deadline=None)
def test_norm_preserved_under_gate_sequences(seed, length):
    rng = np.random.default_rng(seed)
    ops = [hadamard_first(), hadamard_both(), identity(2)]
    s = basis_state("00")
    for _ in range(length):
        s = apply(ops[rng.integers(len(ops))], s)
        assert abs(np.sum(np.abs(s.amplitudes) ** 2) - 1.0) < 1e-12
