import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.exceptions import ConfigError, ValidationError
from core.Linalg import eig_hermitian, hermiticity_defect
from core.Quantum import State, expectation, variance
from core.Quantum.standard import PAULI_X, PAULI_Z
from core.Relations import evaluate_instance
from core.Sampling import (
    CATALOG,
    InstanceSpec,
    Provenance,
    bloch_state,
    draw_gue,
    eigenstate_instance,
    explicit_instance,
    gue_hermitian,
    haar_gue_instance,
    haar_state,
    make_rng,
    named_instance,
    orthogonal_deviation_instance,
    random_unitary,
    random_vector_pair,
    regenerate,
)

seeds = st.integers(min_value=0, max_value=2 ** 64 - 1)


def _same_instance(left: InstanceSpec, right: InstanceSpec) -> bool:
    return (
        np.array_equal(left.a.matrix, right.a.matrix)
        and np.array_equal(left.b.matrix, right.b.matrix)
        and np.array_equal(left.phi.vector, right.phi.vector)
    )


@given(st.sampled_from([Provenance.HAAR_GUE, Provenance.EIGENSTATE, Provenance.ORTHO_DEVIATION]), seeds)
def test_regenerate_is_bit_reproducible(provenance, seed):
    first = regenerate(seed, provenance, 4)
    second = regenerate(seed, provenance, 4)
    assert _same_instance(first, second)
    assert first.provenance is provenance and first.seed == seed


def test_dimension_and_provenance_separate_streams():
    assert not _same_instance(haar_gue_instance(3, 1), haar_gue_instance(3, 2))
    assert not np.array_equal(haar_gue_instance(3, 1).a.matrix, eigenstate_instance(3, 1).a.matrix)


def test_haar_overlap_with_ket_zero_averages_one_half():
    overlaps = [abs(haar_state(2, seed).vector[0]) ** 2 for seed in range(10_000)]
    assert abs(np.mean(overlaps) - 0.5) <= 0.02


@pytest.mark.parametrize("scale", [1.0, 2.5])
def test_gue_eigenvalues_center_on_zero(scale):
    eigenvalues = [eig_hermitian(gue_hermitian(4, seed, scale=scale).matrix).eigenvalues for seed in range(500)]
    assert abs(np.mean(eigenvalues)) <= 0.1 * scale


@given(st.integers(min_value=2, max_value=8), seeds)
def test_haar_state_and_gue_are_valid(dim, seed):
    state = haar_state(dim, seed)
    assert abs(np.linalg.norm(state.vector) - 1.0) <= 1e-12
    matrix = gue_hermitian(dim, seed).matrix
    assert hermiticity_defect(matrix) == 0.0


@given(st.integers(min_value=1, max_value=8), seeds)
def test_random_unitary_is_unitary(dim, seed):
    u = random_unitary(make_rng(seed), dim)
    assert np.allclose(u.conj().T @ u, np.eye(dim), atol=1e-12)


@given(st.integers(min_value=2, max_value=8), seeds)
def test_eigenstate_instance_has_zero_spread_in_a(dim, seed):
    spec = eigenstate_instance(dim, seed)
    scale = 1.0 + spec.a.frobenius ** 2
    assert variance(spec.a, spec.phi) <= 1e-20 * scale
    eigenvalue = spec.parameters["eigenvalue"]
    assert abs(expectation(spec.a, spec.phi) - eigenvalue) <= 1e-10 * (1.0 + spec.a.frobenius)


@given(st.integers(min_value=3, max_value=8), seeds)
def test_orthogonal_deviation_instance(dim, seed):
    spec = orthogonal_deviation_instance(dim, seed)
    a, b = spec.parameters["a"], spec.parameters["b"]
    assert 0.1 <= a <= 10.0 and 0.1 <= b <= 10.0
    assert abs(variance(spec.a, spec.phi) - a * a) <= 1e-10 * a * a
    assert abs(variance(spec.b, spec.phi) - b * b) <= 1e-10 * b * b


def test_orthogonal_deviation_needs_three_dimensions():
    with pytest.raises(ValidationError) as excinfo:
        orthogonal_deviation_instance(2, 0)
    assert excinfo.value.invariant == "dimension"


def test_gue_scale_must_be_positive():
    with pytest.raises(ConfigError):
        draw_gue(make_rng(0), 2, scale=0.0)


def test_explicit_instances_carry_no_seed():
    spec = explicit_instance(PAULI_X, PAULI_Z, [1, 0])
    assert spec.provenance is Provenance.EXPLICIT and spec.seed is None
    with pytest.raises(ValidationError):
        InstanceSpec(dim=2, a=PAULI_X, b=PAULI_Z, phi=spec.phi, provenance=Provenance.HAAR_GUE)
    with pytest.raises(ConfigError):
        regenerate(0, Provenance.EXPLICIT, 2)


def test_instance_members_must_share_dimension():
    with pytest.raises(ValidationError) as excinfo:
        explicit_instance(PAULI_X, PAULI_Z, State.basis(3, 0))
    assert excinfo.value.invariant == "dimension"


def _close(left, right, scale):
    if left is None or right is None:
        return left is right
    return abs(left - right) <= 1e-9 * max(scale, abs(left))


@given(
    st.sampled_from([Provenance.HAAR_GUE, Provenance.EIGENSTATE, Provenance.ORTHO_DEVIATION]),
    st.integers(min_value=3, max_value=5),
    seeds,
)
def test_rotation_leaves_every_record_unchanged(provenance, dim, seed):
    spec = regenerate(seed, provenance, dim)
    rotated = spec.rotated(random_unitary(make_rng(seed, (7, dim)), dim))
    assert abs(variance(spec.a, spec.phi) - variance(rotated.a, rotated.phi)) <= 1e-10 * (1.0 + spec.a.frobenius ** 2)
    before = evaluate_instance(spec.a, spec.b, spec.phi)
    after = evaluate_instance(rotated.a, rotated.b, rotated.phi)
    for original, turned in zip(before, after):
        assert original.relation is turned.relation
        assert original.defined == turned.defined, original.relation
        assert original.holds == turned.holds, original.relation
        for field in ("lhs", "rhs", "gap"):
            assert _close(getattr(original, field), getattr(turned, field), original.scale), (original.relation, field)


def test_qutrit_catalog_entry():
    spec = named_instance("qutrit-uncorrelated")
    assert spec.dim == 3
    assert np.array_equal(spec.phi.vector, [1, 0, 0])
    assert set(CATALOG) == {"qubit-sx-sz", "qubit-sz-sy", "qubit-sx-sy", "qutrit-uncorrelated"}
    with pytest.raises(ConfigError) as excinfo:
        named_instance("nope")
    assert "qutrit-uncorrelated" in excinfo.value.extra_data["available"]


def test_bloch_state_poles():
    assert np.allclose(bloch_state(0.0, 1.0).vector, [1, 0])
    assert np.allclose(bloch_state(np.pi, 0.0).vector, [0, 1], atol=1e-15)


def test_random_vector_pair_norm_range():
    for seed in range(50):
        for vector in random_vector_pair(5, seed):
            assert 0.1 - 1e-12 <= np.linalg.norm(vector) <= 10.0 + 1e-12
