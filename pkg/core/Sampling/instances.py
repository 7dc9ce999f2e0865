"""
(A, B, phi) instances: random, degenerate and explicit.

Random instances draw everything from one Generator seeded with
(seed, dim, provenance code), so regenerate(seed, provenance, dim) reproduces
an instance bit-for-bit.
"""

import math
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import ConfigError, DimensionMismatchError, ValidationError
from ..Linalg import eig_hermitian
from ..Quantum import Observable, State
from ..Quantum.standard import transition
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .generators import draw_gue, draw_haar_state, random_unitary
from .rng import SEED_LIMIT, make_rng

logger = structlog.get_logger(__name__)

# log-uniform range of the degenerate-instance amplitudes
AMPLITUDE_RANGE = (0.1, 10.0)


class Provenance(str, Enum):
    HAAR_GUE = "HAAR_GUE"
    EIGENSTATE = "EIGENSTATE"
    ORTHO_DEVIATION = "ORTHO_DEVIATION"
    EXPLICIT = "EXPLICIT"

    @property
    def code(self) -> int:
        return _CODES[self]

    @property
    def min_dim(self) -> int:
        """ORTHO_DEVIATION needs three orthogonal directions."""
        return 3 if self is Provenance.ORTHO_DEVIATION else 2

    @property
    def is_random(self) -> bool:
        return self is not Provenance.EXPLICIT


_CODES = {
    Provenance.EXPLICIT: 0,
    Provenance.HAAR_GUE: 1,
    Provenance.EIGENSTATE: 2,
    Provenance.ORTHO_DEVIATION: 3,
}

RANDOM_PROVENANCES = (Provenance.HAAR_GUE, Provenance.EIGENSTATE, Provenance.ORTHO_DEVIATION)


class InstanceSpec(BaseModel):
    """
    Two observables and a state of one common dimension, with the recipe that made them.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., gt=0)
    a: Observable
    b: Observable
    phi: State
    provenance: Provenance = Provenance.EXPLICIT
    seed: Optional[int] = Field(None, ge=0, lt=SEED_LIMIT, description="Absent for EXPLICIT instances")
    parameters: Dict[str, float] = Field(default_factory=dict, description="Construction scalars, e.g. amplitudes")

    @model_validator(mode="after")
    def _check_consistent(self) -> "InstanceSpec":
        for member, dim in (("A", self.a.dim), ("B", self.b.dim), ("phi", self.phi.dim)):
            if dim != self.dim:
                raise DimensionMismatchError(self.dim, dim, f"instance member {member}")
        if self.provenance.is_random and self.seed is None:
            raise ValidationError(f"{self.provenance.value} instances need a seed", "seed")
        if not self.provenance.is_random and self.seed is not None:
            raise ValidationError("EXPLICIT instances carry no seed", "seed")
        return self

    def rotated(self, unitary: np.ndarray) -> "InstanceSpec":
        """The same instance in another basis: U A U^dagger, U B U^dagger, U phi."""
        return self.model_copy(
            update={
                "a": self.a.conjugated(unitary),
                "b": self.b.conjugated(unitary),
                "phi": self.phi.rotated(unitary),
            }
        )


def _rng(seed: int, provenance: Provenance, dim: int) -> np.random.Generator:
    return make_rng(seed, (dim, provenance.code))


def _require_dim(dim: int, provenance: Provenance) -> int:
    if int(dim) < provenance.min_dim:
        raise ValidationError(
            f"{provenance.value} instances need dim >= {provenance.min_dim}, got {dim}",
            "dimension",
            dim=int(dim),
        )
    return int(dim)


def haar_gue_instance(dim: int, seed: int, scale: float = 1.0) -> InstanceSpec:
    dim = _require_dim(dim, Provenance.HAAR_GUE)
    rng = _rng(seed, Provenance.HAAR_GUE, dim)
    a = draw_gue(rng, dim, scale, label="A")
    b = draw_gue(rng, dim, scale, label="B")
    phi = draw_haar_state(rng, dim)
    return InstanceSpec(dim=dim, a=a, b=b, phi=phi, provenance=Provenance.HAAR_GUE, seed=seed)


def eigenstate_instance(dim: int, seed: int, tolerances: Tolerances = DEFAULT_TOLERANCES) -> InstanceSpec:
    """phi is an eigenvector of A (index drawn from the seed); B is independent."""
    dim = _require_dim(dim, Provenance.EIGENSTATE)
    rng = _rng(seed, Provenance.EIGENSTATE, dim)
    a = draw_gue(rng, dim, label="A")
    decomposition = eig_hermitian(a.matrix, tolerances)
    index = int(rng.integers(dim))
    phi = State.normalize(decomposition.vector(index))
    b = draw_gue(rng, dim, label="B")
    return InstanceSpec(
        dim=dim,
        a=a,
        b=b,
        phi=phi,
        provenance=Provenance.EIGENSTATE,
        seed=seed,
        parameters={"eigen_index": float(index), "eigenvalue": float(decomposition.eigenvalues[index])},
    )


def orthogonal_deviation_instance(dim: int, seed: int) -> InstanceSpec:
    """
    A = a(|0><1| + |1><0|), B = b(|0><2| + |2><0|), phi = |0>, all rotated by
    one Haar unitary. Then dA|phi> = a U|1> and dB|phi> = b U|2> are orthogonal,
    dA = a and dB = b.
    """
    dim = _require_dim(dim, Provenance.ORTHO_DEVIATION)
    rng = _rng(seed, Provenance.ORTHO_DEVIATION, dim)
    low, high = (math.log10(bound) for bound in AMPLITUDE_RANGE)
    amp_a, amp_b = (10.0 ** value for value in rng.uniform(low, high, size=2))
    unitary = random_unitary(rng, dim)
    a = transition(dim, 0, 1, amp_a, label="A").conjugated(unitary)
    b = transition(dim, 0, 2, amp_b, label="B").conjugated(unitary)
    phi = State.normalize(unitary[:, 0])
    return InstanceSpec(
        dim=dim,
        a=a,
        b=b,
        phi=phi,
        provenance=Provenance.ORTHO_DEVIATION,
        seed=seed,
        parameters={"a": amp_a, "b": amp_b},
    )


def explicit_instance(a: Any, b: Any, phi: Any, tolerances: Optional[Tolerances] = None) -> InstanceSpec:
    """Wrap given observables and state; raw arrays are validated on the way in."""
    a = a if isinstance(a, Observable) else Observable.build(a, label="A", tolerances=tolerances)
    b = b if isinstance(b, Observable) else Observable.build(b, label="B", tolerances=tolerances)
    phi = phi if isinstance(phi, State) else State.build(phi, tolerances=tolerances)
    return InstanceSpec(dim=phi.dim, a=a, b=b, phi=phi, provenance=Provenance.EXPLICIT)


_BUILDERS = {
    Provenance.HAAR_GUE: haar_gue_instance,
    Provenance.EIGENSTATE: eigenstate_instance,
    Provenance.ORTHO_DEVIATION: orthogonal_deviation_instance,
}


def regenerate(seed: int, provenance: Provenance, dim: int) -> InstanceSpec:
    """Rebuild a random instance from its recipe."""
    provenance = Provenance(provenance)
    builder = _BUILDERS.get(provenance)
    if builder is None:
        raise ConfigError(f"{provenance.value} instances cannot be regenerated from a seed")
    logger.debug("Regenerating instance", seed=seed, provenance=provenance.value, dim=dim)
    return builder(dim, seed)
