import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.exceptions import DimensionMismatchError
from core.Quantum import (
    State,
    are_uncorrelated,
    commutator_expectation,
    covariance,
    covariance_moment_form,
    deviation_vector,
    expectation,
    std_dev,
    symmetric_covariance,
    variance,
    variance_moment_form,
)
from core.Quantum.standard import KET_0, KET_PLUS, PAULI_X, PAULI_Y, PAULI_Z
from core.Sampling import haar_gue_instance

seeds = st.integers(min_value=0, max_value=2 ** 63)
dims = st.integers(min_value=2, max_value=6)


def test_expectations_on_ket_zero():
    assert expectation(PAULI_Z, KET_0) == 1.0
    assert expectation(PAULI_X, KET_0) == 0.0


def test_deviation_vectors():
    assert np.allclose(deviation_vector(PAULI_X, KET_0).vector, [0, 1])
    assert np.allclose(deviation_vector(PAULI_Z, KET_0).vector, [0, 0])


def test_variances_and_spreads():
    assert variance(PAULI_Z, KET_0) == 0.0
    assert variance(PAULI_X, KET_0) == 1.0
    assert std_dev(PAULI_X, KET_0) == 1.0
    assert std_dev(PAULI_Z, KET_0) == 0.0


def test_covariances():
    assert np.isclose(covariance(PAULI_X, PAULI_Y, KET_0), 1j)
    assert covariance(PAULI_X, PAULI_Z, KET_0) == 0
    assert symmetric_covariance(PAULI_X, PAULI_Y, KET_0) == 0.0
    assert are_uncorrelated(PAULI_X, PAULI_Z, KET_0)
    assert not are_uncorrelated(PAULI_X, PAULI_Y, KET_0)


def test_commutator_expectations():
    assert np.isclose(commutator_expectation(PAULI_X, PAULI_Y, KET_0), 2j)
    assert abs(commutator_expectation(PAULI_X, PAULI_Z, KET_PLUS)) < 1e-15


def test_dimension_checks():
    with pytest.raises(DimensionMismatchError):
        expectation(PAULI_X, State.basis(3, 0))


@given(dims, seeds)
def test_variance_forms_agree(dim, seed):
    spec = haar_gue_instance(dim, seed)
    scale = 1.0 + spec.a.frobenius ** 2
    assert variance(spec.a, spec.phi) >= 0.0
    assert abs(variance(spec.a, spec.phi) - variance_moment_form(spec.a, spec.phi)) <= 1e-10 * scale


@given(dims, seeds)
def test_covariance_forms_agree(dim, seed):
    spec = haar_gue_instance(dim, seed)
    scale = 1.0 + spec.a.frobenius * spec.b.frobenius
    c = covariance(spec.a, spec.b, spec.phi)
    assert abs(c - covariance_moment_form(spec.a, spec.b, spec.phi)) <= 1e-10 * scale
    # C(A,B) - C(B,A) = <[A,B]>, and the commutator expectation is imaginary
    commutator = commutator_expectation(spec.a, spec.b, spec.phi)
    assert abs(c - c.conjugate() - commutator) <= 1e-10 * scale
    assert abs(commutator.real) <= 1e-10 * scale


@given(dims, seeds)
def test_cauchy_schwarz_on_covariance(dim, seed):
    spec = haar_gue_instance(dim, seed)
    bound = std_dev(spec.a, spec.phi) * std_dev(spec.b, spec.phi)
    assert abs(covariance(spec.a, spec.b, spec.phi)) <= bound * (1 + 1e-12) + 1e-12
    assert math.isfinite(bound)


@given(dims, seeds, st.floats(min_value=-10.0, max_value=10.0))
def test_variance_ignores_identity_shift(dim, seed, offset):
    spec = haar_gue_instance(dim, seed)
    scale = 1.0 + spec.a.frobenius ** 2 + offset * offset
    assert abs(variance(spec.a.shifted(offset), spec.phi) - variance(spec.a, spec.phi)) <= 1e-10 * scale
