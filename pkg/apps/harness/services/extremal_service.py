"""
Gap-minimization service.

Resolves the observable pair (instance file, named example or seeded random
pair), runs the restarted simplex search and, for qubits, optionally checks
the result against the Bloch-sphere grid.
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

import structlog
from pydantic import BaseModel, ConfigDict

from core.exceptions import ConfigError
from core.Execution import PoolExecutor
from core.Quantum import Observable
from core.Relations import Relation
from core.Search import GridMinimum, SearchConfig, SearchResult, bloch_grid_minimum, minimize_gap
from core.Sampling import haar_gue_instance, named_instance
from core.tolerances import DEFAULT_TOLERANCES, Tolerances

from ..serializers import load_instance

logger = structlog.get_logger(__name__)

GRID_POINTS = 200
# best_gap and the grid minimum must agree this closely
GRID_AGREEMENT = 1e-6


class ObservablePair(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: str
    a: Observable
    b: Observable

    @property
    def dim(self) -> int:
        return self.a.dim


class ExtremalReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: str
    config: SearchConfig
    result: SearchResult
    grid: Optional[GridMinimum] = None

    @property
    def grid_agrees(self) -> Optional[bool]:
        if self.grid is None or self.grid.gap is None:
            return None
        return abs(self.result.best_gap - self.grid.gap) <= GRID_AGREEMENT

    @property
    def ok(self) -> bool:
        return not self.result.crossed_bound

    def to_document(self) -> Dict[str, Any]:
        result = self.result
        document: Dict[str, Any] = {
            "source": self.source,
            "config": self.config.model_dump(mode="json"),
            "relation": result.relation.value,
            "dim": result.best_state.dim,
            "best_state": result.best_state.vector,
            "best_gap": result.best_gap,
            "best_record": result.best_record.model_dump(mode="json"),
            "evaluations": result.evaluations,
            "converged": result.converged,
            "best_restart": result.best_restart,
            "restart_gaps": result.restart_gaps,
            "trace": result.trace,
            "crossed_bound": result.crossed_bound,
            "ok": self.ok,
        }
        if self.grid is not None:
            document["grid"] = {
                "points": self.grid.points,
                "gap": self.grid.gap,
                "theta": self.grid.theta,
                "phi_angle": self.grid.phi_angle,
                "undefined_count": self.grid.undefined_count,
                "agrees": self.grid_agrees,
            }
        return document


class ExtremalService:
    """Service for searching the state that minimizes a relation's gap."""

    @staticmethod
    def resolve_pair(
        instance: Optional[Union[str, Path]] = None,
        example: Optional[str] = None,
        dim: Optional[int] = None,
        seed: int = 0,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> ObservablePair:
        """Exactly one of `instance`, `example` or `dim` selects the observables."""
        chosen = [option for option in (instance, example, dim) if option is not None]
        if len(chosen) != 1:
            raise ConfigError("Give exactly one of --instance, --example or --dim")
        if instance is not None:
            spec = load_instance(instance, tolerances)
            source = str(instance)
        elif example is not None:
            spec = named_instance(example)
            source = f"example:{example}"
        else:
            spec = haar_gue_instance(dim, seed)
            source = f"random:HAAR_GUE d={dim} seed={seed}"
        return ObservablePair(source=source, a=spec.a, b=spec.b)

    @staticmethod
    def run(
        pair: ObservablePair,
        config: SearchConfig,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        executor: Optional[PoolExecutor] = None,
        grid_check: bool = False,
        grid_points: int = GRID_POINTS,
    ) -> ExtremalReport:
        result = minimize_gap(pair.a, pair.b, config, tolerances, executor)
        grid = None
        if grid_check:
            if pair.dim != 2:
                raise ConfigError(f"--grid-check needs qubit observables, got dim {pair.dim}", dim=pair.dim)
            grid = bloch_grid_minimum(config.relation, pair.a, pair.b, grid_points, tolerances)

        report = ExtremalReport(source=pair.source, config=config, result=result, grid=grid)
        if report.grid_agrees is False:
            logger.warning(
                "Search and grid minima disagree",
                best_gap=result.best_gap,
                grid_gap=grid.gap,
                tolerance=GRID_AGREEMENT,
            )
        return report

    @staticmethod
    def search_config(
        relation: Relation,
        restarts: int,
        max_iterations: int,
        convergence_tol: float,
        seed: int,
    ) -> SearchConfig:
        return SearchConfig(
            relation=relation,
            restarts=restarts,
            max_iterations=max_iterations,
            convergence_tol=convergence_tol,
            seed=seed,
        )


# Global instance for convenience
extremal_service = ExtremalService()
