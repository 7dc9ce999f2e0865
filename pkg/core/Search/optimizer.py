"""
Nelder-Mead minimization of a reverse relation's gap over pure states.

Each restart starts from a Haar-random state drawn from (seed, restart index)
and runs scipy's Nelder-Mead with the standard coefficients (reflection 1,
expansion 2, contraction 1/2, shrink 1/2). Restarts are independent; the
merge keeps the smallest gap, lowest restart index first on ties.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.optimize import minimize

from ..Execution import PoolExecutor
from ..log_safe import log_safe_output
from ..Quantum import Observable, State
from ..Relations import EvalRecord, Relation
from ..Sampling import SEED_LIMIT, draw_haar_state, make_rng
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .objective import UNDEFINED_PENALTY, GapObjective, require_searchable
from .parameterization import parameterize_state, state_to_params

logger = structlog.get_logger(__name__)

_RESTART_STREAM = 201
# edge length of the initial simplex, in radians
INITIAL_STEP = 0.5


class SearchConfig(BaseModel):
    relation: Relation = Field(Relation.REV_COV, description="Upper-bound relation whose gap is minimized")
    max_iterations: int = Field(2000, ge=1, description="Simplex iterations per restart")
    restarts: int = Field(8, ge=1, description="Independent Haar-random starts")
    convergence_tol: float = Field(1e-9, gt=0, description="Simplex diameter (and value spread) at convergence")
    seed: int = Field(0, ge=0, lt=SEED_LIMIT)
    record_trace: bool = Field(True, description="Keep the best-so-far gap per iteration")

    model_config = {"frozen": True}

    @field_validator("relation")
    @classmethod
    def _upper_bound_only(cls, relation: Relation) -> Relation:
        return require_searchable(relation)


class SearchResult(BaseModel):
    """
    The best state found. best_gap is the relation gap recomputed at
    best_state (UNDEFINED_PENALTY if every restart ended where it is undefined).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    relation: Relation
    best_state: State
    best_gap: float
    best_record: EvalRecord
    evaluations: int = Field(..., ge=0)
    converged: bool
    best_restart: int = Field(..., ge=0)
    restart_gaps: List[float] = Field(default_factory=list)
    trace: Optional[List[Tuple[int, float]]] = Field(None, description="(iteration, best gap so far), non-increasing")
    crossed_bound: bool = Field(False, description="True when the returned state violates the relation")


@dataclass
class _RestartTask:
    a: Observable
    b: Observable
    config: SearchConfig
    tolerances: Tolerances
    index: int


@dataclass
class _RestartOutcome:
    index: int
    params: np.ndarray
    gap: float
    evaluations: int
    iterations: int
    converged: bool
    trace: List[float] = field(default_factory=list)


def start_state(dim: int, seed: int, index: int) -> State:
    return draw_haar_state(make_rng(seed, (_RESTART_STREAM, dim, index)), dim)


def _run_restart(task: _RestartTask) -> _RestartOutcome:
    config = task.config
    objective = GapObjective(config.relation, task.a, task.b, task.tolerances)
    x0 = state_to_params(start_state(objective.dim, config.seed, task.index))
    simplex = np.vstack([x0, x0 + INITIAL_STEP * np.eye(x0.size)])
    trace: List[float] = []

    def callback(intermediate_result) -> None:
        if config.record_trace:
            best = intermediate_result.fun if not trace else min(trace[-1], intermediate_result.fun)
            trace.append(float(best))

    result = minimize(
        objective,
        x0,
        method="Nelder-Mead",
        callback=callback,
        options={
            "maxiter": config.max_iterations,
            "xatol": config.convergence_tol,
            "fatol": config.convergence_tol,
            "initial_simplex": simplex,
            "adaptive": False,
        },
    )
    return _RestartOutcome(
        index=task.index,
        params=np.asarray(result.x, dtype=float),
        gap=float(result.fun),
        evaluations=objective.evaluations,
        iterations=int(result.nit),
        converged=result.status == 0,
        trace=trace,
    )


def _merged_trace(outcomes: List[_RestartOutcome]) -> List[Tuple[int, float]]:
    trace: List[Tuple[int, float]] = []
    best = np.inf
    iteration = 0
    for outcome in outcomes:
        for value in outcome.trace:
            iteration += 1
            best = min(best, value)
            trace.append((iteration, float(best)))
    return trace


def minimize_gap(
    a: Observable,
    b: Observable,
    config: Optional[SearchConfig] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    executor: Optional[PoolExecutor] = None,
) -> SearchResult:
    config = config or SearchConfig()
    # validates dimensions and relation before any restart runs
    objective = GapObjective(config.relation, a, b, tolerances)
    tasks = [_RestartTask(a, b, config, tolerances, index) for index in range(config.restarts)]
    if executor is None:
        outcomes = [_run_restart(task) for task in tasks]
    else:
        outcomes = executor.map(_run_restart, tasks)

    best = min(outcomes, key=lambda outcome: (outcome.gap, outcome.index))
    best_state = parameterize_state(best.params, objective.dim)
    best_record = objective.record(best_state)
    best_gap = best_record.gap if best_record.defined else UNDEFINED_PENALTY
    crossed = best_record.violated

    log = logger.warning if crossed else logger.info
    log(
        "Gap search finished",
        relation=config.relation.value,
        dim=objective.dim,
        best_gap=best_gap,
        best_restart=best.index,
        best_state=log_safe_output(best_state.vector),
        crossed_bound=crossed,
    )
    return SearchResult(
        relation=config.relation,
        best_state=best_state,
        best_gap=best_gap,
        best_record=best_record,
        evaluations=sum(outcome.evaluations for outcome in outcomes),
        converged=best.converged,
        best_restart=best.index,
        restart_gaps=[outcome.gap for outcome in outcomes],
        trace=_merged_trace(outcomes) if config.record_trace else None,
        crossed_bound=crossed,
    )
