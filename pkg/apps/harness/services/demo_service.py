"""
Degenerate-case demonstration.

Builds instances where the reverse relations collapse to closed forms and
prints each reduced form next to the numeric evaluation:

    uncorrelated (C(A,B) = 0):  REV_COV   lhs <= lhs
                                REV_PROD  0 <= dA dB          (gap = 2 dA dB)
                                REV_DW    0 <= (dA - dB)^2
    phi an eigenvector of B:    REV_COV, REV_PROD  (dA)^2 <= (dA)^2
                                REV_DW    undefined
"""

from typing import List, Optional

import structlog
from pydantic import BaseModel, ConfigDict
from rich.table import Table

from apps.common.output import format_human
from core.Relations import EvalRecord, PairMoments, Relation, RelationRegistry, pair_moments
from core.Sampling import InstanceSpec, orthogonal_deviation_instance, qubit_sx_sz, qutrit_uncorrelated
from core.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = structlog.get_logger(__name__)

_REVERSE = (Relation.REV_COV, Relation.REV_PROD, Relation.REV_DW)


class DemoRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: str
    relation: Relation
    reduced_form: str
    record: EvalRecord
    expected_defined: bool
    expected_gap: Optional[float] = None
    consistent: bool


class DemoReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[DemoRow]

    @property
    def ok(self) -> bool:
        return all(row.consistent for row in self.rows)

    def to_document(self) -> dict:
        document = self.model_dump(mode="json")
        document["ok"] = self.ok
        return document


def _uncorrelated_forms(moments: PairMoments) -> List[tuple]:
    return [
        (Relation.REV_COV, "lhs <= lhs", True, 0.0),
        (Relation.REV_PROD, "0 <= dA dB", True, 2.0 * moments.std_a * moments.std_b),
        (Relation.REV_DW, "0 <= (dA - dB)^2", True, (moments.std_a - moments.std_b) ** 2),
    ]


def _eigenstate_forms(moments: PairMoments) -> List[tuple]:
    return [
        (Relation.REV_COV, "(dA)^2 <= (dA)^2", True, 0.0),
        (Relation.REV_PROD, "(dA)^2 <= (dA)^2", True, 0.0),
        (Relation.REV_DW, "undefined: phi is an eigenvector of B", False, None),
    ]


class DemoService:
    """Service reproducing the degenerate cases of the reverse relations."""

    @staticmethod
    def cases(seed: int = 0) -> List[tuple]:
        return [
            ("qutrit uncorrelated", qutrit_uncorrelated(), _uncorrelated_forms),
            (f"ORTHO_DEVIATION d=3 seed={seed}", orthogonal_deviation_instance(3, seed), _uncorrelated_forms),
            ("qubit (sx, sz, |0>) eigenstate", qubit_sx_sz(), _eigenstate_forms),
        ]

    @staticmethod
    def evaluate_case(
        name: str,
        spec: InstanceSpec,
        forms,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> List[DemoRow]:
        moments = pair_moments(spec.a, spec.b, spec.phi, tolerances)
        rows = []
        for relation, reduced_form, expected_defined, expected_gap in forms(moments):
            record = RelationRegistry.evaluate(relation, spec.a, spec.b, spec.phi, tolerances, moments)
            consistent = record.defined == expected_defined
            if consistent and record.defined:
                consistent = record.holds and abs(record.gap - expected_gap) <= tolerances.equality * record.scale
            rows.append(
                DemoRow(
                    instance=name,
                    relation=relation,
                    reduced_form=reduced_form,
                    record=record,
                    expected_defined=expected_defined,
                    expected_gap=expected_gap,
                    consistent=consistent,
                )
            )
        return rows

    @staticmethod
    def run(seed: int = 0, tolerances: Tolerances = DEFAULT_TOLERANCES) -> DemoReport:
        rows = []
        for name, spec, forms in DemoService.cases(seed):
            rows.extend(DemoService.evaluate_case(name, spec, forms, tolerances))
        report = DemoReport(rows=rows)
        if not report.ok:
            logger.warning("Reduced form disagrees with evaluation", inconsistent=sum(not r.consistent for r in rows))
        return report

    @staticmethod
    def table(report: DemoReport) -> Table:
        table = Table(title="degenerate cases: reduced form vs evaluation")
        table.add_column("instance")
        table.add_column("relation")
        table.add_column("reduced form")
        for column in ("lhs", "rhs", "gap", "expected gap"):
            table.add_column(column, justify="right")
        table.add_column("check")
        for row in report.rows:
            record = row.record
            table.add_row(
                row.instance,
                row.relation.value,
                row.reduced_form,
                format_human(record.lhs),
                format_human(record.rhs),
                format_human(record.gap) if record.defined else "[yellow]UNDEFINED[/yellow]",
                format_human(row.expected_gap),
                "[green]ok[/green]" if row.consistent else "[bold red]MISMATCH[/bold red]",
            )
        return table


# Global instance for convenience
demo_service = DemoService()
