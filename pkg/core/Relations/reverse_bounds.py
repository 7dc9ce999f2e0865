"""
Reverse uncertainty relations: upper bounds on (dA)^2 + (dB)^2 for two
observables in one pure state, plus the Robertson lower bound for context.

With psi1 = dA|phi>, psi2 = dB|phi> and psi1 - psi2 = d(A-B)|phi>, the
vector relations IN0 and IN1 become REV_COV and REV_PROD. REV_DW comes from
the Dunkl-Williams inequality and is undefined when phi is an eigenvector of
A or B, or when cov/(dA dB) reaches 1.

d(A-B) is taken from the explicitly built observable A - B; the vector
difference ||psi1 - psi2||^2 is kept in aux as a cross-check.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from ..Linalg import CVector
from ..Quantum import Observable, State, deviation_vector, variance
from ..Quantum.statistics import commutator_expectation
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .records import SEARCHABLE_RELATIONS, EvalRecord, Relation, make_record, undefined_record
from .vector_bounds import bound_in0, bound_in1


@dataclass(frozen=True)
class PairMoments:
    """Everything the reverse relations need from one (A, B, phi), computed once."""

    psi1: CVector
    psi2: CVector
    var_a: float
    var_b: float
    var_diff: float
    var_diff_vector: float
    var_sum: float
    cov: complex
    commutator: complex
    frobenius_a: float
    frobenius_b: float

    @property
    def std_a(self) -> float:
        return math.sqrt(self.var_a)

    @property
    def std_b(self) -> float:
        return math.sqrt(self.var_b)

    @property
    def std_diff(self) -> float:
        return math.sqrt(self.var_diff)

    @property
    def scale(self) -> float:
        return 1.0 + self.frobenius_a ** 2 + self.frobenius_b ** 2

    @property
    def variance_sum(self) -> float:
        return self.var_a + self.var_b

    def aux(self) -> Dict[str, float]:
        return {
            "std_a": self.std_a,
            "std_b": self.std_b,
            "std_diff": self.std_diff,
            "var_diff_vector": self.var_diff_vector,
            "abs_cov": abs(self.cov),
            "cov_re": self.cov.real,
            "cov_im": self.cov.imag,
        }


def pair_moments(
    a: Observable,
    b: Observable,
    phi: State,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    difference: Optional[Observable] = None,
    total: Optional[Observable] = None,
) -> PairMoments:
    """
    `difference` and `total` may pass in a prebuilt A - B and A + B when the
    same pair is evaluated on many states.
    """
    difference = difference if difference is not None else a.minus(b)
    total = total if total is not None else a.plus(b)
    psi1 = deviation_vector(a, phi, tolerances).vector
    psi2 = deviation_vector(b, phi, tolerances).vector
    diff = psi1 - psi2
    return PairMoments(
        psi1=psi1,
        psi2=psi2,
        var_a=float(np.vdot(psi1, psi1).real),
        var_b=float(np.vdot(psi2, psi2).real),
        var_diff=variance(difference, phi, tolerances),
        var_diff_vector=float(np.vdot(diff, diff).real),
        var_sum=variance(total, phi, tolerances),
        cov=complex(np.vdot(psi1, psi2)),
        commutator=commutator_expectation(a, b, phi),
        frobenius_a=a.frobenius,
        frobenius_b=b.frobenius,
    )


def _moments(a, b, phi, tolerances, moments: Optional[PairMoments]) -> PairMoments:
    return moments if moments is not None else pair_moments(a, b, phi, tolerances)


def reverse_covariance(
    a: Observable,
    b: Observable,
    phi: State,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    moments: Optional[PairMoments] = None,
) -> EvalRecord:
    """(dA)^2 + (dB)^2 <= [d(A-B)]^2 + 2|C_phi(A,B)|. Always defined."""
    m = _moments(a, b, phi, tolerances, moments)
    return make_record(
        Relation.REV_COV,
        lhs=m.variance_sum,
        rhs=m.var_diff + 2.0 * abs(m.cov),
        scale=m.scale,
        tolerances=tolerances,
        aux=m.aux(),
    )


def reverse_product(
    a: Observable,
    b: Observable,
    phi: State,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    moments: Optional[PairMoments] = None,
) -> EvalRecord:
    """(dA)^2 + (dB)^2 <= [d(A-B)]^2 + 2 dA dB. Always defined."""
    m = _moments(a, b, phi, tolerances, moments)
    return make_record(
        Relation.REV_PROD,
        lhs=m.variance_sum,
        rhs=m.var_diff + 2.0 * m.std_a * m.std_b,
        scale=m.scale,
        tolerances=tolerances,
        aux=m.aux(),
    )


def reverse_dw(
    a: Observable,
    b: Observable,
    phi: State,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    moments: Optional[PairMoments] = None,
) -> EvalRecord:
    """
    (dA)^2 + (dB)^2 <= 2[d(A-B)]^2 / (1 - cov/(dA dB)) - 2 dA dB, cov = Re C_phi(A,B).

    Undefined when dA dB vanishes at unit operator scale (phi is an eigenvector
    of A or B) or when the denominator vanishes.
    """
    m = _moments(a, b, phi, tolerances, moments)
    aux = m.aux()
    product = m.std_a * m.std_b
    unit = m.frobenius_a * m.frobenius_b
    if unit <= 0.0 or product / unit <= tolerances.undefined:
        return undefined_record(Relation.REV_DW, "eigenvector: dA or dB vanishes", aux)

    # 1 - cov/(dA dB) = ||psi1/dA - psi2/dB||^2 / 2, without the cancellation
    unit_gap = m.psi1 / m.std_a - m.psi2 / m.std_b
    denominator = 0.5 * float(np.vdot(unit_gap, unit_gap).real)
    aux.update({"cov_ratio": m.cov.real / product, "denominator": denominator})
    if denominator <= tolerances.undefined:
        return undefined_record(Relation.REV_DW, "vanishing denominator: cov = dA dB", aux)

    return make_record(
        Relation.REV_DW,
        lhs=m.variance_sum,
        rhs=2.0 * m.var_diff / denominator - 2.0 * product,
        scale=m.scale,
        tolerances=tolerances,
        aux=aux,
    )


def robertson_lower(
    a: Observable,
    b: Observable,
    phi: State,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    moments: Optional[PairMoments] = None,
) -> EvalRecord:
    """dA dB >= |<[A,B]>_phi| / 2."""
    m = _moments(a, b, phi, tolerances, moments)
    return make_record(
        Relation.ROBERTSON,
        lhs=m.std_a * m.std_b,
        rhs=0.5 * abs(m.commutator),
        scale=m.scale,
        tolerances=tolerances,
        aux={"std_a": m.std_a, "std_b": m.std_b, "commutator_im": m.commutator.imag},
    )


def deviation_bounds(
    a: Observable,
    b: Observable,
    phi: State,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    moments: Optional[PairMoments] = None,
) -> Tuple[EvalRecord, EvalRecord]:
    """IN0 and IN1 applied to the deviation vectors: the vector form of REV_COV and REV_PROD."""
    m = _moments(a, b, phi, tolerances, moments)
    return bound_in0(m.psi1, m.psi2, tolerances), bound_in1(m.psi1, m.psi2, tolerances)


class VarianceCorridor(BaseModel):
    """
    |<[A,B]>| <= (dA)^2 + (dB)^2 <= min over defined reverse bounds.
    The lower end follows from Robertson and 2 dA dB <= (dA)^2 + (dB)^2.
    """

    value: float
    lower: float
    upper: Dict[Relation, float] = Field(default_factory=dict)
    tightest: Optional[Relation] = None

    model_config = {"frozen": True}

    @property
    def upper_min(self) -> Optional[float]:
        return self.upper[self.tightest] if self.tightest is not None else None

    @property
    def slack(self) -> Optional[float]:
        return None if self.tightest is None else self.upper_min - self.value


def variance_sum_corridor(
    a: Observable,
    b: Observable,
    phi: State,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    moments: Optional[PairMoments] = None,
) -> VarianceCorridor:
    m = _moments(a, b, phi, tolerances, moments)
    records = [
        reverse_covariance(a, b, phi, tolerances, m),
        reverse_product(a, b, phi, tolerances, m),
        reverse_dw(a, b, phi, tolerances, m),
    ]
    return corridor_from_records(m.variance_sum, abs(m.commutator), records)


_BOUND_ORDER = (Relation.REV_COV, Relation.REV_PROD, Relation.REV_DW)


def _defined_upper_bounds(records) -> Dict[Relation, float]:
    return {r.relation: r.rhs for r in records if r.relation in SEARCHABLE_RELATIONS and r.defined}


def tightest_upper_bound(records) -> Optional[Relation]:
    """The defined reverse relation with the smallest rhs; REV_COV, REV_PROD, REV_DW order breaks ties."""
    upper = _defined_upper_bounds(records)
    tightest = None
    for relation in _BOUND_ORDER:
        if relation in upper and (tightest is None or upper[relation] < upper[tightest]):
            tightest = relation
    return tightest


def corridor_from_records(value: float, lower: float, records) -> VarianceCorridor:
    return VarianceCorridor(
        value=value,
        lower=lower,
        upper=_defined_upper_bounds(records),
        tightest=tightest_upper_bound(records),
    )
