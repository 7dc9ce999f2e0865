import time

import numpy as np
import pytest

from core.exceptions import ConfigError, ValidationError
from core.Execution import PoolExecutor, PoolType
from core.Quantum.standard import PAULI_X, PAULI_Y, PAULI_Z
from core.Relations import Relation
from core.Sampling import gue_hermitian
from core.Search import (
    UNDEFINED_PENALTY,
    GapObjective,
    SearchConfig,
    bloch_grid_minimum,
    gap_objective,
    minimize_gap,
)


def test_gap_objective_at_ket_zero():
    # params (0, 0) is |0>, where REV_COV saturates for (sx, sz)
    assert abs(gap_objective(Relation.REV_COV, PAULI_X, PAULI_Z, [0.0, 0.0])) <= 1e-12


def test_gap_objective_penalizes_undefined_points():
    objective = GapObjective(Relation.REV_DW, PAULI_X, PAULI_Z)
    assert objective([0.0, 0.0]) == UNDEFINED_PENALTY
    assert objective.evaluations == 1


def test_lower_bound_relations_cannot_be_searched():
    with pytest.raises(ConfigError) as excinfo:
        SearchConfig(relation=Relation.ROBERTSON)
    assert "upper bound" in excinfo.value.message
    with pytest.raises(ConfigError):
        GapObjective(Relation.DW, PAULI_X, PAULI_Z)


def test_rev_cov_sx_sz_finds_saturating_state():
    started = time.perf_counter()
    result = minimize_gap(PAULI_X, PAULI_Z, SearchConfig(relation=Relation.REV_COV, seed=1))
    assert time.perf_counter() - started < 1.0
    assert result.best_gap <= 1e-6
    assert not result.crossed_bound
    assert result.best_record.holds
    assert len(result.restart_gaps) == 8


def test_rev_dw_sz_sy_reaches_equality():
    result = minimize_gap(PAULI_Z, PAULI_Y, SearchConfig(relation=Relation.REV_DW, seed=2))
    assert result.best_gap <= 1e-6
    assert result.best_record.defined


def test_identical_observables_saturate():
    a = gue_hermitian(3, 5)
    for relation in (Relation.REV_COV, Relation.REV_PROD):
        result = minimize_gap(a, a, SearchConfig(relation=relation, restarts=2))
        assert result.best_gap <= 1e-10


def test_trace_is_monotone():
    result = minimize_gap(PAULI_X, PAULI_Z, SearchConfig(relation=Relation.REV_PROD, restarts=3))
    values = [value for _, value in result.trace]
    assert values == sorted(values, reverse=True)
    assert [index for index, _ in result.trace] == list(range(1, len(values) + 1))


def test_no_trace_when_disabled():
    result = minimize_gap(PAULI_X, PAULI_Z, SearchConfig(restarts=1, record_trace=False))
    assert result.trace is None


def test_result_independent_of_pool():
    config = SearchConfig(relation=Relation.REV_COV, restarts=4, seed=9)
    a, b = gue_hermitian(3, 1), gue_hermitian(3, 2)
    serial = minimize_gap(a, b, config)
    with PoolExecutor(PoolType.THREAD, 3) as executor:
        threaded = minimize_gap(a, b, config, executor=executor)
    assert serial.best_gap == threaded.best_gap
    assert serial.restart_gaps == threaded.restart_gaps
    assert np.array_equal(serial.best_state.vector, threaded.best_state.vector)


@pytest.mark.slow
@pytest.mark.parametrize(
    "a, b, relation",
    [(PAULI_X, PAULI_Z, Relation.REV_COV), (PAULI_Z, PAULI_Y, Relation.REV_DW)],
)
def test_search_agrees_with_bloch_grid(a, b, relation):
    grid = bloch_grid_minimum(relation, a, b, points=200)
    result = minimize_gap(a, b, SearchConfig(relation=relation))
    assert grid.gap is not None
    assert result.best_gap <= 1e-6
    assert abs(result.best_gap - grid.gap) <= 1e-6


def test_grid_counts_undefined_points():
    # REV_DW for (sx, sz) is undefined at the poles, where the state is an sz eigenvector
    grid = bloch_grid_minimum(Relation.REV_DW, PAULI_X, PAULI_Z, points=20)
    assert grid.undefined_count >= 20
    assert grid.points == 20


def test_grid_needs_qubits():
    a = gue_hermitian(3, 0)
    with pytest.raises(ValidationError) as excinfo:
        bloch_grid_minimum(Relation.REV_COV, a, a)
    assert excinfo.value.invariant == "dimension"
