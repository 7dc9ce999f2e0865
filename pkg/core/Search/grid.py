"""
Brute-force gap minimum over a regular Bloch-sphere grid (qubits only).
Used as an oracle for minimize_gap at dim 2.
"""

import math
from typing import Optional

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict

from ..exceptions import ValidationError
from ..Quantum import Observable, State
from ..Relations import Relation
from ..Sampling import bloch_state
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .objective import GapObjective

logger = structlog.get_logger(__name__)


class GridMinimum(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    relation: Relation
    gap: Optional[float]
    theta: Optional[float]
    phi_angle: Optional[float]
    state: Optional[State]
    points: int
    undefined_count: int


def bloch_grid_minimum(
    relation: Relation,
    a: Observable,
    b: Observable,
    points: int = 200,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> GridMinimum:
    """
    Minimum gap over theta in [0, pi] (points values, both poles included) and
    phi in [0, 2 pi) (points values). Undefined grid points are counted and skipped.
    """
    if a.dim != 2:
        raise ValidationError(f"The Bloch grid needs qubit observables, got dim {a.dim}", "dimension", dim=a.dim)
    if points < 2:
        raise ValidationError(f"Grid needs at least 2 points per axis, got {points}", "grid_points", points=points)
    objective = GapObjective(relation, a, b, tolerances)

    best_gap = math.inf
    best_angles = None
    undefined = 0
    for theta in np.linspace(0.0, math.pi, points):
        for phi_angle in np.linspace(0.0, 2.0 * math.pi, points, endpoint=False):
            record = objective.record(bloch_state(float(theta), float(phi_angle)))
            if not record.defined:
                undefined += 1
                continue
            if record.gap < best_gap:
                best_gap = record.gap
                best_angles = (float(theta), float(phi_angle))

    logger.debug("Bloch grid scanned", relation=objective.relation.value, points=points, undefined=undefined)
    if best_angles is None:
        return GridMinimum(
            relation=objective.relation,
            gap=None,
            theta=None,
            phi_angle=None,
            state=None,
            points=points,
            undefined_count=undefined,
        )
    return GridMinimum(
        relation=objective.relation,
        gap=best_gap,
        theta=best_angles[0],
        phi_angle=best_angles[1],
        state=bloch_state(*best_angles),
        points=points,
        undefined_count=undefined,
    )
