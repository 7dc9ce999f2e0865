import math

import numpy as np
import pytest

from core.exceptions import DimensionMismatchError, NonHermitianError, NormalizationError
from core.Quantum import Observable, State
from core.Quantum.standard import KET_0, PAULI_X, PAULI_Y, PAULI_Z, pauli, transition
from core.tolerances import DEFAULT_TOLERANCES


def test_pauli_matrices_are_hermitian():
    for axis in "xyz":
        assert pauli(axis).dim == 2


def test_non_hermitian_observable_names_the_defect():
    with pytest.raises(NonHermitianError) as excinfo:
        Observable.build([[0, 1], [0, 0]], label="A")
    assert excinfo.value.invariant == "hermiticity"
    assert excinfo.value.defect == 1.0
    assert "Observable A" in excinfo.value.message


def test_hermiticity_tolerance_comes_from_context():
    nearly = [[0, 1 + 1e-7], [1, 0]]
    with pytest.raises(NonHermitianError):
        Observable.build(nearly)
    loose = DEFAULT_TOLERANCES.model_copy(update={"hermiticity": 1e-6})
    assert Observable.build(nearly, tolerances=loose).dim == 2


def test_state_must_be_normalized():
    with pytest.raises(NormalizationError) as excinfo:
        State.build([1, 1])
    assert excinfo.value.invariant == "normalization"
    assert math.isclose(excinfo.value.norm, math.sqrt(2))


def test_normalize_constructor():
    state = State.normalize([3, 4j])
    assert np.allclose(state.vector, [0.6, 0.8j])
    with pytest.raises(NormalizationError):
        State.normalize([0, 0])


def test_observable_arithmetic():
    assert np.array_equal((PAULI_X + PAULI_Z).matrix, [[1, 1], [1, -1]])
    assert np.array_equal((PAULI_X - PAULI_Z).matrix, [[-1, 1], [1, 1]])
    assert np.array_equal(PAULI_Z.scaled(2.0).matrix, [[2, 0], [0, -2]])
    assert np.array_equal(PAULI_Z.shifted(1.0).matrix, [[2, 0], [0, 0]])
    with pytest.raises(DimensionMismatchError):
        PAULI_X.plus(transition(3, 0, 1))


def test_conjugation_by_unitary():
    hadamard = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert np.allclose(PAULI_Z.conjugated(hadamard).matrix, PAULI_X.matrix)
    assert np.allclose(KET_0.rotated(hadamard).vector, [1 / math.sqrt(2), 1 / math.sqrt(2)])


def test_transition_observable():
    t = transition(3, 0, 2, 2.5)
    assert t.matrix[0, 2] == 2.5 and t.matrix[2, 0] == 2.5
    assert np.count_nonzero(t.matrix) == 2


def test_basis_state_label():
    assert State.basis(3, 1).label == "|1>"
    assert np.array_equal(State.basis(3, 1).vector, [0, 1, 0])


def test_frobenius():
    assert math.isclose(PAULI_Y.frobenius, math.sqrt(2))
