"""
Relations between two arbitrary vectors psi1, psi2 of an inner product space.

The chain proved here:
    ||p1||^2 + ||p2||^2 = ||p1 - p2||^2 + 2 Re<p1|p2>            (identity)
                        <= ||p1 - p2||^2 + 2 |<p1|p2>|            (Re z <= |z|)
                        <= ||p1 - p2||^2 + 2 ||p1|| ||p2||        (Cauchy-Schwarz)
plus the Dunkl-Williams lower bound on ||p1 - p2||, which needs both vectors
nonzero.
"""

import math
from dataclasses import dataclass
from typing import List

import numpy as np

from ..Linalg import CVector, require_same_dim
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .records import EvalRecord, Relation, make_record, undefined_record


@dataclass(frozen=True)
class _PairNorms:
    """Norms and inner product of one vector pair, computed once."""

    n1: float
    n2: float
    diff_sq: float
    z: complex

    @classmethod
    def of(cls, psi1: CVector, psi2: CVector) -> "_PairNorms":
        require_same_dim(psi1.shape[0], psi2.shape[0], "vector pair")
        diff = psi1 - psi2
        return cls(
            n1=float(np.linalg.norm(psi1)),
            n2=float(np.linalg.norm(psi2)),
            diff_sq=float(np.vdot(diff, diff).real),
            z=complex(np.vdot(psi1, psi2)),
        )

    @property
    def squared_scale(self) -> float:
        return 1.0 + self.n1 * self.n1 + self.n2 * self.n2

    @property
    def linear_scale(self) -> float:
        return 1.0 + self.n1 + self.n2


def identity_id1_residual(psi1: CVector, psi2: CVector) -> float:
    """Return |(||p1||^2 + ||p2||^2) - (||p1 - p2||^2 + 2 Re<p1|p2>)|."""
    pair = _PairNorms.of(psi1, psi2)
    return abs((pair.n1 ** 2 + pair.n2 ** 2) - (pair.diff_sq + 2.0 * pair.z.real))


def identity_id1(psi1: CVector, psi2: CVector, tolerances: Tolerances = DEFAULT_TOLERANCES) -> EvalRecord:
    pair = _PairNorms.of(psi1, psi2)
    return make_record(
        Relation.ID1,
        lhs=pair.n1 ** 2 + pair.n2 ** 2,
        rhs=pair.diff_sq + 2.0 * pair.z.real,
        scale=pair.squared_scale,
        tolerances=tolerances,
        aux={"re_inner": pair.z.real},
    )


def bound_in0(psi1: CVector, psi2: CVector, tolerances: Tolerances = DEFAULT_TOLERANCES) -> EvalRecord:
    """||p1||^2 + ||p2||^2 <= ||p1 - p2||^2 + 2|<p1|p2>|; saturated iff <p1|p2> is real and >= 0."""
    pair = _PairNorms.of(psi1, psi2)
    abs_inner = abs(pair.z)
    return make_record(
        Relation.IN0,
        lhs=pair.n1 ** 2 + pair.n2 ** 2,
        rhs=pair.diff_sq + 2.0 * abs_inner,
        scale=pair.squared_scale,
        tolerances=tolerances,
        aux={
            "abs_inner": abs_inner,
            "re_inner": pair.z.real,
            "im_inner": pair.z.imag,
            "saturation_gap": 2.0 * (abs_inner - pair.z.real),
        },
    )


def bound_in1(psi1: CVector, psi2: CVector, tolerances: Tolerances = DEFAULT_TOLERANCES) -> EvalRecord:
    """||p1||^2 + ||p2||^2 <= ||p1 - p2||^2 + 2||p1|| ||p2||."""
    pair = _PairNorms.of(psi1, psi2)
    return make_record(
        Relation.IN1,
        lhs=pair.n1 ** 2 + pair.n2 ** 2,
        rhs=pair.diff_sq + 2.0 * pair.n1 * pair.n2,
        scale=pair.squared_scale,
        tolerances=tolerances,
        aux={"norm_1": pair.n1, "norm_2": pair.n2, "rhs_in0": pair.diff_sq + 2.0 * abs(pair.z)},
    )


def cauchy_schwarz(psi1: CVector, psi2: CVector, tolerances: Tolerances = DEFAULT_TOLERANCES) -> EvalRecord:
    pair = _PairNorms.of(psi1, psi2)
    return make_record(
        Relation.CS,
        lhs=abs(pair.z),
        rhs=pair.n1 * pair.n2,
        scale=pair.squared_scale,
        tolerances=tolerances,
    )


def real_part_bound(psi1: CVector, psi2: CVector) -> float:
    """Return |<p1|p2>| - Re<p1|p2>, never negative."""
    z = _PairNorms.of(psi1, psi2).z
    return abs(z) - z.real


def dunkl_williams(psi1: CVector, psi2: CVector, tolerances: Tolerances = DEFAULT_TOLERANCES) -> EvalRecord:
    """
    ||p1 - p2|| >= (||p1|| + ||p2||)/2 * ||p1/||p1|| - p2/||p2||||.

    Undefined when either vector vanishes relative to the larger of 1 and the pair's norms.
    """
    pair = _PairNorms.of(psi1, psi2)
    floor = tolerances.undefined * max(1.0, pair.n1, pair.n2)
    if pair.n1 <= floor or pair.n2 <= floor:
        return undefined_record(
            Relation.DW,
            "zero vector: both vectors must be nonzero",
            aux={"norm_1": pair.n1, "norm_2": pair.n2},
        )
    directions = psi1 / pair.n1 - psi2 / pair.n2
    return make_record(
        Relation.DW,
        lhs=math.sqrt(pair.diff_sq),
        rhs=0.5 * (pair.n1 + pair.n2) * float(np.linalg.norm(directions)),
        scale=pair.linear_scale,
        tolerances=tolerances,
        aux={"norm_1": pair.n1, "norm_2": pair.n2},
    )


def theorem_chain(psi1: CVector, psi2: CVector, tolerances: Tolerances = DEFAULT_TOLERANCES) -> List[EvalRecord]:
    """Evaluate ID1, IN0, IN1, CS and DW on one pair."""
    return [
        identity_id1(psi1, psi2, tolerances),
        bound_in0(psi1, psi2, tolerances),
        bound_in1(psi1, psi2, tolerances),
        cauchy_schwarz(psi1, psi2, tolerances),
        dunkl_williams(psi1, psi2, tolerances),
    ]


def chain_ordered(in0: EvalRecord, in1: EvalRecord, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """True when rhs(IN0) <= rhs(IN1) within tolerance."""
    return in0.rhs <= in1.rhs + tolerances.holds * max(in0.scale, in1.scale)
