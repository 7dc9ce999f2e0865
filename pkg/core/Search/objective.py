"""
Gap of a reverse relation as a function of state parameters.
"""

from typing import Sequence

from ..exceptions import ConfigError, DimensionMismatchError
from ..Quantum import Observable, State
from ..Relations import EvalRecord, Relation, RelationRegistry, pair_moments
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .parameterization import param_count, parameterize_state

# objective value where the relation is undefined; finite so simplex arithmetic stays finite
UNDEFINED_PENALTY = 1e6


def require_searchable(relation: Relation) -> Relation:
    relation = Relation(relation)
    if not relation.is_searchable:
        raise ConfigError(
            f"{relation.value} cannot be minimized: gap search needs an upper bound on (dA)^2 + (dB)^2",
            detail=f"{relation.value} is a {relation.orientation.value.lower()} relation "
            f"({relation.statement}); choose one of REV_COV, REV_PROD, REV_DW",
            relation=relation.value,
        )
    return relation


class GapObjective:
    """
    rhs - lhs of `relation` at parameterize_state(params), for fixed A and B.
    A - B and A + B are built once and reused for every state.
    """

    def __init__(
        self,
        relation: Relation,
        a: Observable,
        b: Observable,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ):
        if a.dim != b.dim:
            raise DimensionMismatchError(a.dim, b.dim, "gap objective")
        self.relation = require_searchable(relation)
        self.a = a
        self.b = b
        self.tolerances = tolerances
        self.difference = a.minus(b)
        self.total = a.plus(b)
        self.evaluations = 0

    @property
    def dim(self) -> int:
        return self.a.dim

    @property
    def param_count(self) -> int:
        return param_count(self.dim)

    def record(self, phi: State) -> EvalRecord:
        moments = pair_moments(self.a, self.b, phi, self.tolerances, self.difference, self.total)
        return RelationRegistry.evaluate(self.relation, self.a, self.b, phi, self.tolerances, moments)

    def gap_at(self, phi: State) -> float:
        record = self.record(phi)
        return record.gap if record.defined else UNDEFINED_PENALTY

    def __call__(self, params: Sequence[float]) -> float:
        self.evaluations += 1
        return self.gap_at(parameterize_state(params, self.dim))


def gap_objective(
    relation: Relation,
    a: Observable,
    b: Observable,
    params: Sequence[float],
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    return GapObjective(relation, a, b, tolerances)(params)
