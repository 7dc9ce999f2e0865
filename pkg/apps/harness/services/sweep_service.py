"""
Monte-Carlo sweep service.

Trials are grouped into batches of consecutive seeds per (dim, provenance).
Batches may run in parallel; results are reduced strictly in batch order,
so the CSV and JSON bytes never depend on the worker count.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from core.exceptions import ConfigError
from core.Execution import PoolExecutor
from core.Relations import EvalRecord, Relation, evaluate_instance, tightest_upper_bound
from core.Sampling import SEED_LIMIT, Provenance, check_seed, regenerate
from core.tolerances import DEFAULT_TOLERANCES, Tolerances

from ..reports import RelationTally, SweepConfig, SweepReport, TightestTally, csv_row, render_csv
from ..serializers import dump_instance

logger = structlog.get_logger(__name__)

BATCH_SIZE = 250
_REVERSE = (Relation.REV_COV, Relation.REV_PROD, Relation.REV_DW)


@dataclass(frozen=True)
class _TrialBatch:
    dim: int
    provenance: Provenance
    first_seed: int
    count: int
    relations: Tuple[Relation, ...]
    tolerances: Tolerances


@dataclass(frozen=True)
class _TrialResult:
    trial_seed: int
    records: List[EvalRecord]
    # REV_* records for the tightest-bound tally, even when not selected
    reverse: List[EvalRecord]


def _evaluate_batch(batch: _TrialBatch) -> List[_TrialResult]:
    wanted = list(batch.relations) + [relation for relation in _REVERSE if relation not in batch.relations]
    results = []
    for trial_seed in range(batch.first_seed, batch.first_seed + batch.count):
        spec = regenerate(trial_seed, batch.provenance, batch.dim)
        evaluated = evaluate_instance(spec.a, spec.b, spec.phi, wanted, batch.tolerances)
        by_relation = {record.relation: record for record in evaluated}
        results.append(
            _TrialResult(
                trial_seed=trial_seed,
                records=[by_relation[relation] for relation in batch.relations],
                reverse=[by_relation[relation] for relation in _REVERSE],
            )
        )
    return results


@dataclass
class _Accumulator:
    holds: int = 0
    violations: int = 0
    undefined: int = 0
    equality: int = 0
    gaps: List[float] = field(default_factory=list)

    def add(self, record: EvalRecord, tolerances: Tolerances) -> None:
        if not record.defined:
            self.undefined += 1
            return
        self.gaps.append(record.gap)
        if record.holds:
            self.holds += 1
        else:
            self.violations += 1
        if record.is_equality(tolerances):
            self.equality += 1

    def tally(self, provenance: Provenance, relation: Relation) -> RelationTally:
        quantiles: Dict[str, Optional[float]] = dict.fromkeys(("gap_min", "gap_median", "gap_p99", "gap_max"))
        if self.gaps:
            values = np.quantile(np.asarray(self.gaps), [0.0, 0.5, 0.99, 1.0])
            quantiles = dict(zip(quantiles, (float(value) for value in values)))
        return RelationTally(
            provenance=provenance,
            relation=relation,
            trials=self.holds + self.violations + self.undefined,
            holds_count=self.holds,
            violation_count=self.violations,
            undefined_count=self.undefined,
            equality_count=self.equality,
            worst_gap=min(self.gaps) if self.gaps else None,
            **quantiles,
        )


@dataclass
class SweepOutcome:
    report: SweepReport
    csv_rows: List[List[str]]
    dumped: List[Path] = field(default_factory=list)

    def render_csv(self) -> str:
        return render_csv(self.csv_rows)


class SweepService:
    """Service for running Monte-Carlo sweeps over generated instances."""

    @staticmethod
    def build_config(
        dims: Sequence[int],
        trials: int,
        seed: int,
        relations: Sequence[Relation],
        provenances: Sequence[Provenance],
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> SweepConfig:
        if not dims:
            raise ConfigError("No dimensions selected")
        if any(dim < 1 for dim in dims):
            raise ConfigError(f"Dimensions must be positive, got {list(dims)}", dims=list(dims))
        if trials < 1:
            raise ConfigError(f"trials must be >= 1, got {trials}", trials=trials)
        check_seed(seed)
        if seed + trials > SEED_LIMIT:
            raise ConfigError(
                "seed + trials exceeds the seed range",
                seed=seed,
                trials=trials,
                limit=SEED_LIMIT,
            )
        provenances = list(dict.fromkeys(provenances))
        for provenance in provenances:
            if not provenance.is_random:
                raise ConfigError(
                    f"Provenance {provenance.value} cannot be sampled",
                    available=[p.value for p in Provenance if p.is_random],
                )
        skipped = [
            f"{provenance.value} d={dim}: needs dim >= {provenance.min_dim}"
            for provenance in provenances
            for dim in dims
            if dim < provenance.min_dim
        ]
        return SweepConfig(
            dims=list(dims),
            trials=trials,
            seed=seed,
            relations=list(relations),
            provenances=provenances,
            tolerances=tolerances,
            skipped=skipped,
        )

    @staticmethod
    def batches(config: SweepConfig, batch_size: int = BATCH_SIZE) -> List[_TrialBatch]:
        batches = []
        for provenance in config.provenances:
            for dim in config.dims:
                if dim < provenance.min_dim:
                    continue
                for offset in range(0, config.trials, batch_size):
                    batches.append(
                        _TrialBatch(
                            dim=dim,
                            provenance=provenance,
                            first_seed=config.seed + offset,
                            count=min(batch_size, config.trials - offset),
                            relations=tuple(config.relations),
                            tolerances=config.tolerances,
                        )
                    )
        return batches

    @staticmethod
    def run(
        config: SweepConfig,
        executor: Optional[PoolExecutor] = None,
        collect_rows: bool = True,
        dump_failures: Optional[Path] = None,
    ) -> SweepOutcome:
        batches = SweepService.batches(config)
        logger.info(
            "Sweep started",
            dims=config.dims,
            trials=config.trials,
            provenances=[p.value for p in config.provenances],
            batches=len(batches),
        )
        if executor is None:
            batch_results = [_evaluate_batch(batch) for batch in batches]
        else:
            batch_results = executor.map(_evaluate_batch, batches)

        accumulators: Dict[Tuple[Provenance, Relation], _Accumulator] = defaultdict(_Accumulator)
        tightest: Dict[Provenance, Dict[Relation, int]] = defaultdict(dict)
        none_defined: Dict[Provenance, int] = defaultdict(int)
        rows: List[List[str]] = []
        dumped: List[Path] = []

        for batch, results in zip(batches, batch_results):
            for result in results:
                for record in result.records:
                    accumulators[(batch.provenance, record.relation)].add(record, config.tolerances)
                    if collect_rows:
                        rows.append(csv_row(result.trial_seed, batch.dim, batch.provenance, record))
                best = tightest_upper_bound(result.reverse)
                if best is None:
                    none_defined[batch.provenance] += 1
                else:
                    counts = tightest[batch.provenance]
                    counts[best] = counts.get(best, 0) + 1
                if dump_failures is not None and any(record.violated for record in result.records):
                    dumped.append(SweepService.dump_failure(dump_failures, batch, result))

        tallies = [
            accumulators[(provenance, relation)].tally(provenance, relation)
            for provenance in config.provenances
            for relation in config.relations
            if (provenance, relation) in accumulators
        ]
        tightest_tallies = [
            TightestTally(provenance=provenance, counts=tightest[provenance], none_defined=none_defined[provenance])
            for provenance in config.provenances
            if provenance in tightest or provenance in none_defined
        ]
        report = SweepReport(config=config, tallies=tallies, tightest=tightest_tallies)

        log = logger.warning if report.total_violations else logger.info
        log(
            "Sweep finished",
            tallies=len(tallies),
            violations=report.total_violations,
            worst_gap=report.worst_gap,
        )
        return SweepOutcome(report=report, csv_rows=rows, dumped=dumped)

    @staticmethod
    def dump_failure(directory: Path, batch: _TrialBatch, result: _TrialResult) -> Path:
        spec = regenerate(result.trial_seed, batch.provenance, batch.dim)
        path = Path(directory) / f"{batch.provenance.value.lower()}-d{batch.dim}-{result.trial_seed}.json"
        written = dump_instance(spec, path, result.records)
        logger.warning("Violating instance written", path=str(written), trial_seed=result.trial_seed)
        return written


# Global instance for convenience
sweep_service = SweepService()
