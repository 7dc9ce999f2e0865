"""
Evaluation records.

An EvalRecord is one comparison lhs vs rhs. The raw sides keep the orientation
in which the relation is usually written; `gap` is re-oriented so that
gap >= 0 means "holds" for upper bounds, lower bounds and identities alike:

    UPPER     lhs <= rhs      gap = rhs - lhs
    LOWER     lhs >= rhs      gap = lhs - rhs
    IDENTITY  lhs == rhs      gap = -|lhs - rhs|

`holds` is gap >= -tolerance * scale, where `scale` brings the operands back
to unit size. Undefined records carry no numeric sides at all.
"""

from enum import Enum
from typing import Dict, Optional

from pydantic import BaseModel, Field, model_validator

from ..tolerances import DEFAULT_TOLERANCES, Tolerances


class Orientation(Enum):
    UPPER = "UPPER"
    LOWER = "LOWER"
    IDENTITY = "IDENTITY"


class Relation(str, Enum):
    ID1 = "ID1"
    IN0 = "IN0"
    IN1 = "IN1"
    CS = "CS"
    DW = "DW"
    REV_COV = "REV_COV"
    REV_PROD = "REV_PROD"
    REV_DW = "REV_DW"
    ROBERTSON = "ROBERTSON"

    @property
    def orientation(self) -> Orientation:
        return _ORIENTATION[self]

    @property
    def is_vector_relation(self) -> bool:
        """Relations stated for an arbitrary vector pair (psi1, psi2)."""
        return self in VECTOR_RELATIONS

    @property
    def is_searchable(self) -> bool:
        """Upper bounds on the variance sum, whose gap can be minimized over states."""
        return self in SEARCHABLE_RELATIONS

    @property
    def statement(self) -> str:
        return _STATEMENTS[self]


_ORIENTATION = {
    Relation.ID1: Orientation.IDENTITY,
    Relation.IN0: Orientation.UPPER,
    Relation.IN1: Orientation.UPPER,
    Relation.CS: Orientation.UPPER,
    Relation.DW: Orientation.LOWER,
    Relation.REV_COV: Orientation.UPPER,
    Relation.REV_PROD: Orientation.UPPER,
    Relation.REV_DW: Orientation.UPPER,
    Relation.ROBERTSON: Orientation.LOWER,
}

_STATEMENTS = {
    Relation.ID1: "|p1|^2 + |p2|^2 = |p1 - p2|^2 + 2 Re<p1|p2>",
    Relation.IN0: "|p1|^2 + |p2|^2 <= |p1 - p2|^2 + 2 |<p1|p2>|",
    Relation.IN1: "|p1|^2 + |p2|^2 <= |p1 - p2|^2 + 2 |p1| |p2|",
    Relation.CS: "|<p1|p2>| <= |p1| |p2|",
    Relation.DW: "|p1 - p2| >= (|p1| + |p2|)/2 * |p1/|p1| - p2/|p2||",
    Relation.REV_COV: "(dA)^2 + (dB)^2 <= [d(A-B)]^2 + 2 |C(A,B)|",
    Relation.REV_PROD: "(dA)^2 + (dB)^2 <= [d(A-B)]^2 + 2 dA dB",
    Relation.REV_DW: "(dA)^2 + (dB)^2 <= 2 [d(A-B)]^2 / (1 - cov/(dA dB)) - 2 dA dB",
    Relation.ROBERTSON: "dA dB >= |<[A,B]>| / 2",
}

VECTOR_RELATIONS = frozenset({Relation.ID1, Relation.IN0, Relation.IN1, Relation.CS, Relation.DW})
SEARCHABLE_RELATIONS = frozenset({Relation.REV_COV, Relation.REV_PROD, Relation.REV_DW})
ALL_RELATIONS = tuple(Relation)


class EvalRecord(BaseModel):
    """
    One evaluation of a relation.
    """

    relation: Relation
    defined: bool = Field(True, description="False when the relation has no meaning for these inputs")
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    gap: Optional[float] = Field(None, description="Oriented so that gap >= 0 means the relation holds")
    holds: bool = False
    scale: float = Field(1.0, gt=0, description="Magnitude used to scale the holds tolerance")
    reason: Optional[str] = Field(None, description="Why the relation is undefined")
    aux: Dict[str, float] = Field(default_factory=dict, description="Named intermediate scalars")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _sides_match_definedness(self) -> "EvalRecord":
        sides = (self.lhs, self.rhs, self.gap)
        if self.defined and any(side is None for side in sides):
            raise ValueError("defined records need lhs, rhs and gap")
        if not self.defined and (any(side is not None for side in sides) or self.holds):
            raise ValueError("undefined records carry no sides and never hold")
        return self

    @property
    def violated(self) -> bool:
        return self.defined and not self.holds

    def is_equality(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
        return self.defined and abs(self.gap) <= tolerances.equality


def oriented_gap(orientation: Orientation, lhs: float, rhs: float) -> float:
    if orientation is Orientation.UPPER:
        return rhs - lhs
    if orientation is Orientation.LOWER:
        return lhs - rhs
    return -abs(lhs - rhs)


def make_record(
    relation: Relation,
    lhs: float,
    rhs: float,
    scale: float,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    aux: Optional[Dict[str, float]] = None,
) -> EvalRecord:
    gap = oriented_gap(relation.orientation, lhs, rhs)
    return EvalRecord(
        relation=relation,
        lhs=float(lhs),
        rhs=float(rhs),
        gap=float(gap),
        holds=bool(gap >= -tolerances.holds * scale),
        scale=float(scale),
        aux=aux or {},
    )


def undefined_record(relation: Relation, reason: str, aux: Optional[Dict[str, float]] = None) -> EvalRecord:
    return EvalRecord(relation=relation, defined=False, reason=reason, aux=aux or {})
