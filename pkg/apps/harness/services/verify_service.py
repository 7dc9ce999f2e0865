"""
Instance verification service.

Evaluates every selected relation on one instance, derives the scalar table
and the variance-sum corridor, and audits any records the file claims.
"""

from pathlib import Path
from typing import List, Optional, Sequence, Union

import structlog

from core.Relations import (
    EvalRecord,
    PairMoments,
    Relation,
    RelationRegistry,
    oriented_gap,
    pair_moments,
    variance_sum_corridor,
)
from core.Sampling import InstanceSpec
from core.tolerances import DEFAULT_TOLERANCES, Tolerances

from ..reports import ClaimAudit, DerivedScalars, VerifyReport
from ..serializers import read_instance_file

logger = structlog.get_logger(__name__)


class VerifyService:
    """Service for evaluating and auditing single instances."""

    @staticmethod
    def derived_scalars(moments: PairMoments) -> DerivedScalars:
        return DerivedScalars(
            std_a=moments.std_a,
            std_b=moments.std_b,
            std_diff=moments.std_diff,
            std_sum=moments.var_sum ** 0.5,
            cov_re=moments.cov.real,
            cov_im=moments.cov.imag,
            abs_cov=abs(moments.cov),
            commutator_im=moments.commutator.imag,
            robertson_lower=0.5 * abs(moments.commutator),
            variance_sum=moments.variance_sum,
        )

    @staticmethod
    def audit_claim(claim: EvalRecord, actual: EvalRecord, tolerances: Tolerances) -> ClaimAudit:
        """
        A claim is consistent when its own gap and holds flag follow from its
        sides, and agrees when it matches the recomputed record.
        """
        consistent = True
        problems = []
        if claim.defined:
            expected_gap = oriented_gap(claim.relation.orientation, claim.lhs, claim.rhs)
            if abs(expected_gap - claim.gap) > tolerances.equality * claim.scale:
                consistent = False
                problems.append(f"claimed gap {claim.gap!r} does not follow from lhs/rhs")
            if claim.holds != (claim.gap >= -tolerances.holds * claim.scale):
                consistent = False
                problems.append("claimed holds flag contradicts the claimed gap")

        agrees = claim.defined == actual.defined and claim.holds == actual.holds
        if agrees and claim.defined:
            allowed = tolerances.equality * actual.scale
            agrees = abs(claim.lhs - actual.lhs) <= allowed and abs(claim.rhs - actual.rhs) <= allowed
        if not agrees:
            problems.append("claim disagrees with recomputation")
        if claim.defined and not claim.holds:
            problems.append("claims a violation")

        return ClaimAudit(
            relation=claim.relation,
            claimed_holds=claim.holds,
            claimed_defined=claim.defined,
            consistent=consistent,
            agrees=agrees,
            message="; ".join(problems) or "ok",
        )

    @staticmethod
    def verify_spec(
        spec: InstanceSpec,
        source: str = "<memory>",
        relations: Optional[Sequence[Relation]] = None,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        claims: Optional[List[EvalRecord]] = None,
    ) -> VerifyReport:
        moments = pair_moments(spec.a, spec.b, spec.phi, tolerances)
        selected = list(relations) if relations is not None else RelationRegistry.available()
        records = [
            RelationRegistry.evaluate(relation, spec.a, spec.b, spec.phi, tolerances, moments)
            for relation in selected
        ]
        corridor = variance_sum_corridor(spec.a, spec.b, spec.phi, tolerances, moments)

        audits = []
        for claim in claims or []:
            actual = RelationRegistry.evaluate(claim.relation, spec.a, spec.b, spec.phi, tolerances, moments)
            audits.append(VerifyService.audit_claim(claim, actual, tolerances))

        report = VerifyReport(
            source=source,
            dim=spec.dim,
            provenance=spec.provenance,
            seed=spec.seed,
            tolerances=tolerances,
            records=records,
            scalars=VerifyService.derived_scalars(moments),
            corridor=corridor,
            claims=audits,
        )
        logger.info(
            "Instance verified",
            source=source,
            dim=spec.dim,
            violations=len(report.violations),
            failed_claims=len(report.failed_claims),
        )
        return report

    @staticmethod
    def verify_file(
        path: Union[str, Path],
        relations: Optional[Sequence[Relation]] = None,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> VerifyReport:
        document = read_instance_file(path)
        spec = document.to_spec(tolerances)
        return VerifyService.verify_spec(spec, str(path), relations, tolerances, document.records)


# Global instance for convenience
verify_service = VerifyService()
