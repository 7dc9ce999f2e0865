"""
Instance file schema.

    {"dim": d,
     "A": [[[re, im], ...], ...],  row-major
     "B": [[[re, im], ...], ...],
     "phi": [[re, im], ...],
     "normalize": false,
     "provenance": "EXPLICIT", "seed": null, "parameters": {},   optional
     "records": [...]}                                           optional claims

Files are validated twice: structurally by InstanceFile, then numerically
(Hermiticity, normalization, dimensions) when converted to an InstanceSpec.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import orjson
import pydantic
import structlog
from pydantic import BaseModel, ConfigDict, Field

from apps.common.output import dumps_json, write_bytes
from core.exceptions import InstanceParseError, ShapeError
from core.log_safe import log_safe_output
from core.Quantum import Observable, State
from core.Relations import EvalRecord
from core.Sampling import SEED_LIMIT, InstanceSpec, Provenance
from core.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = structlog.get_logger(__name__)

ComplexPair = Tuple[float, float]


class InstanceFile(BaseModel):
    """JSON layout of an (A, B, phi) instance."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    dim: int = Field(..., gt=0)
    a: List[List[ComplexPair]] = Field(..., alias="A", description="Observable A as [re, im] pairs, row-major")
    b: List[List[ComplexPair]] = Field(..., alias="B", description="Observable B as [re, im] pairs, row-major")
    phi: List[ComplexPair] = Field(..., description="State vector as [re, im] pairs")
    normalize: bool = Field(False, description="Scale phi to unit norm instead of rejecting it")
    provenance: Provenance = Provenance.EXPLICIT
    seed: Optional[int] = Field(None, ge=0, lt=SEED_LIMIT)
    parameters: Dict[str, float] = Field(default_factory=dict)
    records: Optional[List[EvalRecord]] = Field(None, description="Claimed evaluations to audit")

    def to_spec(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> InstanceSpec:
        a = _matrix(self.a, self.dim, "A")
        b = _matrix(self.b, self.dim, "B")
        vector = _vector(self.phi, self.dim)
        phi = State.normalize(vector) if self.normalize else State.build(vector, tolerances=tolerances)
        return InstanceSpec(
            dim=self.dim,
            a=Observable.build(a, label="A", tolerances=tolerances),
            b=Observable.build(b, label="B", tolerances=tolerances),
            phi=phi,
            provenance=self.provenance,
            seed=self.seed,
            parameters=self.parameters,
        )


def _matrix(rows: Sequence[Sequence[ComplexPair]], dim: int, name: str) -> np.ndarray:
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise ShapeError(f"{name} must be {dim}x{dim}", (len(rows), *sorted({len(row) for row in rows})))
    pairs = np.asarray(rows, dtype=float)
    return pairs[..., 0] + 1j * pairs[..., 1]


def _vector(entries: Sequence[ComplexPair], dim: int) -> np.ndarray:
    if len(entries) != dim:
        raise ShapeError(f"phi must have {dim} entries", (len(entries),))
    pairs = np.asarray(entries, dtype=float)
    return pairs[:, 0] + 1j * pairs[:, 1]


def _pairs(values: np.ndarray) -> list:
    return np.stack([values.real, values.imag], axis=-1).tolist()


def read_instance_file(path: Union[str, Path]) -> InstanceFile:
    path = Path(path)
    try:
        raw = orjson.loads(path.read_bytes())
    except OSError as exc:
        raise InstanceParseError(str(path), exc.strerror or str(exc)) from exc
    except orjson.JSONDecodeError as exc:
        raise InstanceParseError(str(path), f"invalid JSON: {exc}") from exc
    try:
        return InstanceFile.model_validate(raw)
    except pydantic.ValidationError as exc:
        raise InstanceParseError(str(path), str(exc)) from exc


def load_instance(path: Union[str, Path], tolerances: Tolerances = DEFAULT_TOLERANCES) -> InstanceSpec:
    spec = read_instance_file(path).to_spec(tolerances)
    logger.info(
        "Instance loaded",
        path=str(path),
        dim=spec.dim,
        provenance=spec.provenance.value,
        phi=log_safe_output(spec.phi.vector),
    )
    return spec


def instance_document(spec: InstanceSpec, records: Optional[List[EvalRecord]] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "dim": spec.dim,
        "A": _pairs(spec.a.matrix),
        "B": _pairs(spec.b.matrix),
        "phi": _pairs(spec.phi.vector),
        "normalize": False,
        "provenance": spec.provenance.value,
        "seed": spec.seed,
        "parameters": spec.parameters,
    }
    if records is not None:
        document["records"] = [record.model_dump(mode="json") for record in records]
    return document


def dump_instance(
    spec: InstanceSpec,
    path: Union[str, Path],
    records: Optional[List[EvalRecord]] = None,
) -> Path:
    """Write `spec` in the format load_instance reads; floats round-trip exactly."""
    written = write_bytes(path, dumps_json(instance_document(spec, records)))
    logger.debug("Instance written", path=str(written), dim=spec.dim)
    return written
