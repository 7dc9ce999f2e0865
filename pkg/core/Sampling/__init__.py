from .catalog import CATALOG, named_instance, qubit_sx_sy, qubit_sx_sz, qubit_sz_sy, qutrit_uncorrelated
from .generators import (
    bloch_state,
    complex_gaussian,
    draw_gue,
    draw_haar_state,
    gue_hermitian,
    haar_state,
    random_unitary,
    random_vector_pair,
)
from .instances import (
    RANDOM_PROVENANCES,
    InstanceSpec,
    Provenance,
    eigenstate_instance,
    explicit_instance,
    haar_gue_instance,
    orthogonal_deviation_instance,
    regenerate,
)
from .rng import SEED_LIMIT, check_seed, make_rng

__all__ = [
    "CATALOG",
    "RANDOM_PROVENANCES",
    "SEED_LIMIT",
    "InstanceSpec",
    "Provenance",
    "bloch_state",
    "check_seed",
    "complex_gaussian",
    "draw_gue",
    "draw_haar_state",
    "eigenstate_instance",
    "explicit_instance",
    "gue_hermitian",
    "haar_gue_instance",
    "haar_state",
    "make_rng",
    "named_instance",
    "orthogonal_deviation_instance",
    "qubit_sx_sy",
    "qubit_sx_sz",
    "qubit_sz_sy",
    "qutrit_uncorrelated",
    "random_unitary",
    "random_vector_pair",
    "regenerate",
]
