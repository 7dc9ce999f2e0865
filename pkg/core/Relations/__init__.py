from .records import (
    ALL_RELATIONS,
    SEARCHABLE_RELATIONS,
    VECTOR_RELATIONS,
    EvalRecord,
    Orientation,
    Relation,
    make_record,
    oriented_gap,
    undefined_record,
)
from .registry import RelationRegistry, evaluate_instance, parse_relations
from .reverse_bounds import (
    PairMoments,
    VarianceCorridor,
    corridor_from_records,
    deviation_bounds,
    pair_moments,
    reverse_covariance,
    reverse_dw,
    reverse_product,
    robertson_lower,
    tightest_upper_bound,
    variance_sum_corridor,
)
from .vector_bounds import (
    bound_in0,
    bound_in1,
    cauchy_schwarz,
    chain_ordered,
    dunkl_williams,
    identity_id1,
    identity_id1_residual,
    real_part_bound,
    theorem_chain,
)

__all__ = [
    "ALL_RELATIONS",
    "SEARCHABLE_RELATIONS",
    "VECTOR_RELATIONS",
    "EvalRecord",
    "Orientation",
    "PairMoments",
    "Relation",
    "RelationRegistry",
    "VarianceCorridor",
    "bound_in0",
    "bound_in1",
    "cauchy_schwarz",
    "chain_ordered",
    "corridor_from_records",
    "deviation_bounds",
    "dunkl_williams",
    "evaluate_instance",
    "identity_id1",
    "identity_id1_residual",
    "make_record",
    "oriented_gap",
    "pair_moments",
    "parse_relations",
    "real_part_bound",
    "reverse_covariance",
    "reverse_dw",
    "reverse_product",
    "robertson_lower",
    "theorem_chain",
    "tightest_upper_bound",
    "undefined_record",
    "variance_sum_corridor",
]
