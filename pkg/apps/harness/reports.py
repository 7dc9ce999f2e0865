"""
Report models for the harness commands and their renderings.
"""

import csv
import io
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from rich.table import Table

from apps.common.output import format_human, format_machine
from core.Relations import EvalRecord, Relation, VarianceCorridor
from core.Sampling import Provenance
from core.tolerances import Tolerances


class DerivedScalars(BaseModel):
    """Scalars of one (A, B, phi), all recomputable from the instance."""

    model_config = {"frozen": True}

    std_a: float
    std_b: float
    std_diff: float
    std_sum: float
    cov_re: float = Field(..., description="cov_phi(A,B) = Re C_phi(A,B)")
    cov_im: float
    abs_cov: float
    commutator_im: float = Field(..., description="Im <[A,B]>_phi; the real part vanishes")
    robertson_lower: float = Field(..., description="|<[A,B]>_phi| / 2")
    variance_sum: float


class ClaimAudit(BaseModel):
    """One claimed record from an instance file, checked against recomputation."""

    model_config = {"frozen": True}

    relation: Relation
    claimed_holds: bool
    claimed_defined: bool
    consistent: bool = Field(..., description="The claim agrees with its own gap and tolerance")
    agrees: bool = Field(..., description="The claim matches the recomputed record")
    message: str

    @property
    def failed(self) -> bool:
        return (self.claimed_defined and not self.claimed_holds) or not self.consistent or not self.agrees


class VerifyReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: str
    dim: int
    provenance: Provenance
    seed: Optional[int] = None
    tolerances: Tolerances
    records: List[EvalRecord]
    scalars: DerivedScalars
    corridor: VarianceCorridor
    claims: List[ClaimAudit] = Field(default_factory=list)

    @property
    def violations(self) -> List[EvalRecord]:
        return [record for record in self.records if record.violated]

    @property
    def failed_claims(self) -> List[ClaimAudit]:
        return [claim for claim in self.claims if claim.failed]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.failed_claims

    def to_document(self) -> Dict[str, Any]:
        document = self.model_dump(mode="json")
        document["ok"] = self.ok
        document["violations"] = len(self.violations)
        return document


class RelationTally(BaseModel):
    """Outcome counts and gap distribution of one relation over one provenance."""

    model_config = {"frozen": True}

    provenance: Provenance
    relation: Relation
    trials: int = Field(..., ge=0)
    holds_count: int = Field(..., ge=0)
    violation_count: int = Field(..., ge=0)
    undefined_count: int = Field(..., ge=0)
    equality_count: int = Field(..., ge=0, description="Defined trials with |gap| <= equality tolerance")
    worst_gap: Optional[float] = Field(None, description="Most negative gap seen")
    gap_min: Optional[float] = None
    gap_median: Optional[float] = None
    gap_p99: Optional[float] = None
    gap_max: Optional[float] = None

    @model_validator(mode="after")
    def _counts_add_up(self) -> "RelationTally":
        if self.trials != self.holds_count + self.violation_count + self.undefined_count:
            raise ValueError("trials must equal holds + violations + undefined")
        quantiles = [self.gap_min, self.gap_median, self.gap_p99, self.gap_max]
        present = [q for q in quantiles if q is not None]
        if present and (len(present) != 4 or present != sorted(present)):
            raise ValueError("gap quantiles must be present together and sorted")
        return self


class TightestTally(BaseModel):
    """How often each reverse relation gave the smallest upper bound."""

    model_config = {"frozen": True}

    provenance: Provenance
    counts: Dict[Relation, int] = Field(default_factory=dict)
    none_defined: int = 0


class SweepConfig(BaseModel):
    """Echo of everything that determines a sweep's output."""

    model_config = {"frozen": True}

    dims: List[int]
    trials: int = Field(..., ge=1)
    seed: int = Field(..., ge=0)
    relations: List[Relation]
    provenances: List[Provenance]
    tolerances: Tolerances
    skipped: List[str] = Field(default_factory=list, description="(provenance, dim) pairs not run, with reason")


class SweepReport(BaseModel):
    model_config = {"frozen": True}

    config: SweepConfig
    tallies: List[RelationTally]
    tightest: List[TightestTally] = Field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(tally.violation_count for tally in self.tallies)

    @property
    def worst_gap(self) -> Optional[float]:
        gaps = [tally.worst_gap for tally in self.tallies if tally.worst_gap is not None]
        return min(gaps) if gaps else None

    def to_document(self) -> Dict[str, Any]:
        document = self.model_dump(mode="json")
        document["total_violations"] = self.total_violations
        document["worst_gap"] = self.worst_gap
        return document


CSV_COLUMNS = ["trial_seed", "dim", "provenance", "relation", "defined", "holds", "lhs", "rhs", "gap"]


def csv_row(trial_seed: int, dim: int, provenance: Provenance, record: EvalRecord) -> List[str]:
    return [
        str(trial_seed),
        str(dim),
        provenance.value,
        record.relation.value,
        "true" if record.defined else "false",
        "true" if record.holds else "false",
        format_machine(record.lhs),
        format_machine(record.rhs),
        format_machine(record.gap),
    ]


def render_csv(rows: List[List[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buffer.getvalue()


def _status(record: EvalRecord) -> str:
    if not record.defined:
        return "[yellow]UNDEFINED[/yellow]"
    return "[green]holds[/green]" if record.holds else "[bold red]VIOLATED[/bold red]"


def records_table(records: List[EvalRecord], title: Optional[str] = None) -> Table:
    table = Table(title=title)
    table.add_column("relation")
    table.add_column("status")
    table.add_column("lhs", justify="right")
    table.add_column("rhs", justify="right")
    table.add_column("gap", justify="right")
    table.add_column("note")
    for record in records:
        table.add_row(
            record.relation.value,
            _status(record),
            format_human(record.lhs),
            format_human(record.rhs),
            format_human(record.gap),
            record.reason or ("equality" if record.is_equality() else ""),
        )
    return table


def scalars_table(scalars: DerivedScalars, corridor: VarianceCorridor) -> Table:
    table = Table(title="derived scalars")
    table.add_column("quantity")
    table.add_column("value", justify="right")
    rows = [
        ("dA", scalars.std_a),
        ("dB", scalars.std_b),
        ("d(A-B)", scalars.std_diff),
        ("d(A+B)", scalars.std_sum),
        ("C(A,B)", complex(scalars.cov_re, scalars.cov_im)),
        ("|C(A,B)|", scalars.abs_cov),
        ("cov(A,B)", scalars.cov_re),
        ("Robertson lower bound", scalars.robertson_lower),
        ("(dA)^2 + (dB)^2", scalars.variance_sum),
        ("corridor lower |<[A,B]>|", corridor.lower),
        ("corridor upper", corridor.upper_min),
        ("tightest upper bound", corridor.tightest.value if corridor.tightest else None),
    ]
    for name, value in rows:
        table.add_row(name, value if isinstance(value, str) else format_human(value))
    return table


def tallies_table(report: SweepReport) -> Table:
    table = Table(title=f"sweep: {report.config.trials} trials per (dim, provenance), seed {report.config.seed}")
    for column in ("provenance", "relation", "trials", "holds", "violations", "undefined", "equality", "worst gap", "median gap"):
        table.add_column(column, justify="left" if column in ("provenance", "relation") else "right")
    for tally in report.tallies:
        table.add_row(
            tally.provenance.value,
            tally.relation.value,
            str(tally.trials),
            str(tally.holds_count),
            str(tally.violation_count) if not tally.violation_count else f"[bold red]{tally.violation_count}[/bold red]",
            str(tally.undefined_count),
            str(tally.equality_count),
            format_human(tally.worst_gap),
            format_human(tally.gap_median),
        )
    return table


def tightest_table(report: SweepReport) -> Table:
    table = Table(title="tightest reverse bound")
    table.add_column("provenance")
    for relation in (Relation.REV_COV, Relation.REV_PROD, Relation.REV_DW):
        table.add_column(relation.value, justify="right")
    table.add_column("none defined", justify="right")
    for tally in report.tightest:
        table.add_row(
            tally.provenance.value,
            *(str(tally.counts.get(relation, 0)) for relation in (Relation.REV_COV, Relation.REV_PROD, Relation.REV_DW)),
            str(tally.none_defined),
        )
    return table
