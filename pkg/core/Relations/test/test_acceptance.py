"""
Property suites over many seeded random instances. Trial counts come from
REVBOUND_ACCEPTANCE_TRIALS (default 10000); the derivation, eigenvector and
uncorrelated suites use a tenth of it.
"""

import math

import pytest

from core.Quantum.standard import KET_0, KET_PLUS, PAULI_X, PAULI_Y, PAULI_Z
from core.Relations import (
    Relation,
    bound_in0,
    bound_in1,
    chain_ordered,
    deviation_bounds,
    evaluate_instance,
    identity_id1_residual,
    pair_moments,
    reverse_covariance,
    reverse_dw,
    reverse_product,
    robertson_lower,
    theorem_chain,
)
from core.Relations.test import oracle
from core.Sampling import (
    eigenstate_instance,
    haar_gue_instance,
    orthogonal_deviation_instance,
    qubit_sx_sz,
    qubit_sz_sy,
    qutrit_uncorrelated,
    random_vector_pair,
)
from revbound import settings

pytestmark = pytest.mark.acceptance

TRIALS = settings.ACCEPTANCE_TRIALS
SMALL_TRIALS = max(1, TRIALS // 10)


@pytest.mark.parametrize("dim", [2, 3, 4, 8, 16])
def test_theorem_suite(dim):
    for seed in range(TRIALS):
        psi1, psi2 = random_vector_pair(dim, seed)
        records = theorem_chain(psi1, psi2)
        failures = [record for record in records if not record.holds]
        assert not failures, (seed, failures)
        assert identity_id1_residual(psi1, psi2) <= 1e-10 * records[1].scale
        assert chain_ordered(records[1], records[2]), seed


@pytest.mark.parametrize("dim", [2, 3, 4, 8])
def test_reverse_relation_suite(dim):
    relations = [Relation.REV_COV, Relation.REV_PROD, Relation.REV_DW, Relation.ROBERTSON]
    for seed in range(TRIALS):
        spec = haar_gue_instance(dim, seed)
        for record in evaluate_instance(spec.a, spec.b, spec.phi, relations):
            assert not record.violated, (seed, record)


@pytest.mark.parametrize("dim", [2, 3, 4, 8])
def test_derivation_consistency(dim):
    for seed in range(SMALL_TRIALS):
        spec = haar_gue_instance(dim, seed)
        moments = pair_moments(spec.a, spec.b, spec.phi)
        in0, in1 = deviation_bounds(spec.a, spec.b, spec.phi, moments=moments)
        cov = reverse_covariance(spec.a, spec.b, spec.phi, moments=moments)
        prod = reverse_product(spec.a, spec.b, spec.phi, moments=moments)
        for vector_form, operator_form in ((in0, cov), (in1, prod)):
            assert abs(vector_form.lhs - operator_form.lhs) <= 1e-10
            assert abs(vector_form.rhs - operator_form.rhs) <= 1e-10
            assert abs(vector_form.gap - operator_form.gap) <= 1e-10
            assert vector_form.holds == operator_form.holds
        assert bound_in0(moments.psi1, moments.psi2).rhs == in0.rhs
        assert bound_in1(moments.psi1, moments.psi2).rhs == in1.rhs


@pytest.mark.parametrize("dim", [2, 3, 4, 8])
def test_eigenvector_case(dim):
    for seed in range(SMALL_TRIALS):
        spec = eigenstate_instance(dim, seed)
        assert not reverse_dw(spec.a, spec.b, spec.phi).defined, seed
        for evaluate in (reverse_covariance, reverse_product):
            record = evaluate(spec.a, spec.b, spec.phi)
            assert record.defined and math.isfinite(record.lhs) and math.isfinite(record.rhs)


@pytest.mark.parametrize("dim", [3, 4, 8])
def test_uncorrelated_case(dim):
    for seed in range(SMALL_TRIALS):
        spec = orthogonal_deviation_instance(dim, seed)
        m = pair_moments(spec.a, spec.b, spec.phi)
        relative = 1e-10 * m.variance_sum
        assert abs(m.cov) <= 1e-10 * (1.0 + m.std_a * m.std_b)
        assert abs(m.var_diff - m.variance_sum) <= relative
        assert abs(m.var_sum - m.variance_sum) <= relative

        cov = reverse_covariance(spec.a, spec.b, spec.phi, moments=m)
        assert abs(cov.gap) <= 1e-8 * cov.scale

        prod = reverse_product(spec.a, spec.b, spec.phi, moments=m)
        expected_slack = 2.0 * m.std_a * m.std_b
        assert abs(prod.gap - expected_slack) <= 1e-8 * expected_slack

        dw = reverse_dw(spec.a, spec.b, spec.phi, moments=m)
        assert dw.defined and dw.holds
        assert abs(dw.gap - (m.std_a - m.std_b) ** 2) <= 1e-8 * dw.scale


def test_worked_instances_against_brute_force():
    cases = [
        (qubit_sx_sz(), (oracle.SX, oracle.SZ, oracle.KET_0)),
        (qubit_sz_sy(), (oracle.SZ, oracle.SY, oracle.KET_PLUS)),
        (qutrit_uncorrelated(), oracle.qutrit()),
    ]
    for spec, raw in cases:
        expected = oracle.reverse_sides(*raw)
        records = {r.relation: r for r in evaluate_instance(spec.a, spec.b, spec.phi)}
        for relation in (Relation.REV_COV, Relation.REV_PROD, Relation.REV_DW):
            record = records[relation]
            if expected[relation.value] is None:
                assert not record.defined
                continue
            assert abs(record.lhs - expected["lhs"]) <= 1e-10
            assert abs(record.rhs - expected[relation.value]) <= 1e-10
        lhs, rhs = oracle.robertson_sides(*raw)
        assert abs(records[Relation.ROBERTSON].lhs - lhs) <= 1e-10
        assert abs(records[Relation.ROBERTSON].rhs - rhs) <= 1e-10


def test_worked_values():
    sx_sz = reverse_covariance(PAULI_X, PAULI_Z, KET_0)
    assert abs(sx_sz.lhs - 1.0) <= 1e-10 and abs(sx_sz.rhs - 1.0) <= 1e-10
    assert abs(reverse_product(PAULI_Z, PAULI_Y, KET_PLUS).rhs - 4.0) <= 1e-10
    assert abs(reverse_dw(PAULI_Z, PAULI_Y, KET_PLUS).gap) <= 1e-10
    assert abs(robertson_lower(PAULI_X, PAULI_Y, KET_0).gap) <= 1e-10
