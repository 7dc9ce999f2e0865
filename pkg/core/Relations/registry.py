from typing import Callable, Dict, Iterable, List, Optional, Sequence, Union

import structlog

from ..exceptions import ConfigError
from ..Quantum import Observable, State
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from . import reverse_bounds, vector_bounds
from .records import ALL_RELATIONS, EvalRecord, Relation
from .reverse_bounds import PairMoments, pair_moments

logger = structlog.get_logger(__name__)

Evaluator = Callable[[Observable, Observable, State, Tolerances, PairMoments], EvalRecord]


def _on_deviation_vectors(bound) -> Evaluator:
    """Lift a vector relation onto (A, B, phi) by applying it to dA|phi>, dB|phi>."""

    def evaluate(a, b, phi, tolerances, moments):
        return bound(moments.psi1, moments.psi2, tolerances)

    return evaluate


class RelationRegistry:
    """
    Registry class mapping relation tags to evaluators over an (A, B, phi) triple.
    Vector relations are evaluated on the two deviation vectors.
    """

    _evaluators: Optional[Dict[Relation, Evaluator]] = None

    @classmethod
    def _build(cls) -> Dict[Relation, Evaluator]:
        mapping = {
            Relation.ID1: _on_deviation_vectors(vector_bounds.identity_id1),
            Relation.IN0: _on_deviation_vectors(vector_bounds.bound_in0),
            Relation.IN1: _on_deviation_vectors(vector_bounds.bound_in1),
            Relation.CS: _on_deviation_vectors(vector_bounds.cauchy_schwarz),
            Relation.DW: _on_deviation_vectors(vector_bounds.dunkl_williams),
            Relation.REV_COV: reverse_bounds.reverse_covariance,
            Relation.REV_PROD: reverse_bounds.reverse_product,
            Relation.REV_DW: reverse_bounds.reverse_dw,
            Relation.ROBERTSON: reverse_bounds.robertson_lower,
        }
        logger.debug("Relation evaluators registered", count=len(mapping))
        return mapping

    @classmethod
    def _ensure_loaded(cls) -> Dict[Relation, Evaluator]:
        if cls._evaluators is None:
            cls._evaluators = cls._build()
        return cls._evaluators

    @classmethod
    def available(cls) -> List[Relation]:
        return list(cls._ensure_loaded())

    @classmethod
    def evaluator(cls, relation: Relation) -> Evaluator:
        evaluators = cls._ensure_loaded()
        try:
            return evaluators[relation]
        except KeyError:
            raise ConfigError(
                f"Unknown relation '{relation}'",
                available=[r.value for r in evaluators],
            ) from None

    @classmethod
    def evaluate(
        cls,
        relation: Relation,
        a: Observable,
        b: Observable,
        phi: State,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        moments: Optional[PairMoments] = None,
    ) -> EvalRecord:
        moments = moments if moments is not None else pair_moments(a, b, phi, tolerances)
        return cls.evaluator(relation)(a, b, phi, tolerances, moments)


def parse_relations(names: Union[str, Iterable[str], None]) -> List[Relation]:
    """
    Parse relation names ("REV_COV", "rev-cov", "all") into Relation members,
    in canonical order and without duplicates.
    """
    if names is None:
        return list(ALL_RELATIONS)
    if isinstance(names, str):
        names = names.split(",")
    wanted = set()
    for raw in names:
        token = raw.strip().upper().replace("-", "_")
        if not token:
            continue
        if token == "ALL":
            return list(ALL_RELATIONS)
        try:
            wanted.add(Relation(token))
        except ValueError:
            raise ConfigError(
                f"Unknown relation '{raw.strip()}'",
                available=[r.value for r in ALL_RELATIONS],
            ) from None
    if not wanted:
        raise ConfigError("No relations selected")
    return [relation for relation in ALL_RELATIONS if relation in wanted]


def evaluate_instance(
    a: Observable,
    b: Observable,
    phi: State,
    relations: Optional[Sequence[Relation]] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> List[EvalRecord]:
    """Evaluate `relations` (all by default) on one triple, sharing one PairMoments."""
    moments = pair_moments(a, b, phi, tolerances)
    selected = relations if relations is not None else ALL_RELATIONS
    return [RelationRegistry.evaluate(relation, a, b, phi, tolerances, moments) for relation in selected]
