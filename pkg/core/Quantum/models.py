"""
Validated observables and pure states.

Observables are Hermitian-checked and states norm-checked at construction;
invalid input is rejected rather than silently repaired. The only repairing
constructor is State.normalize. Tolerances may be supplied through the
pydantic validation context: Observable.build(m, tolerances=...).
"""

from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from ..exceptions import DimensionMismatchError, NonHermitianError, NormalizationError
from ..Linalg import CMatrix, CVector, as_cmatrix, as_cvector, basis_vector, hermiticity_defect, identity, norm
from ..Linalg.vectors import frobenius_norm
from ..tolerances import DEFAULT_TOLERANCES, Tolerances


def _tolerances(info: ValidationInfo) -> Tolerances:
    if info.context and "tolerances" in info.context:
        return info.context["tolerances"]
    return DEFAULT_TOLERANCES


class Observable(BaseModel):
    """
    A physical quantity: a d x d Hermitian matrix with a short label.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray = Field(..., description="Hermitian matrix, validated at construction")
    label: str = Field("F", description="Short display name")

    @field_validator("matrix", mode="before")
    @classmethod
    def _coerce_matrix(cls, value: Any) -> CMatrix:
        return as_cmatrix(value)

    @model_validator(mode="after")
    def _check_hermitian(self, info: ValidationInfo) -> "Observable":
        tolerance = _tolerances(info).hermiticity
        defect = hermiticity_defect(self.matrix)
        if defect > tolerance:
            raise NonHermitianError(defect, tolerance, self.label)
        return self

    @classmethod
    def build(cls, matrix: Any, label: str = "F", tolerances: Optional[Tolerances] = None) -> "Observable":
        context = {"tolerances": tolerances} if tolerances is not None else None
        return cls.model_validate({"matrix": matrix, "label": label}, context=context)

    @classmethod
    def identity(cls, dim: int, label: str = "I") -> "Observable":
        return cls(matrix=identity(dim), label=label)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def frobenius(self) -> float:
        return frobenius_norm(self.matrix)

    def plus(self, other: "Observable", label: Optional[str] = None) -> "Observable":
        _same_dim(self, other)
        return Observable(matrix=self.matrix + other.matrix, label=label or f"{self.label}+{other.label}")

    def minus(self, other: "Observable", label: Optional[str] = None) -> "Observable":
        _same_dim(self, other)
        return Observable(matrix=self.matrix - other.matrix, label=label or f"{self.label}-{other.label}")

    def scaled(self, factor: float, label: Optional[str] = None) -> "Observable":
        return Observable(matrix=float(factor) * self.matrix, label=label or f"{factor:g}{self.label}")

    def shifted(self, offset: float, label: Optional[str] = None) -> "Observable":
        """Return F + offset * I."""
        return Observable(
            matrix=self.matrix + float(offset) * np.eye(self.dim),
            label=label or f"{self.label}{offset:+g}I",
        )

    def conjugated(self, unitary: CMatrix, label: Optional[str] = None) -> "Observable":
        """Return U F U^dagger, re-symmetrized so rounding cannot break Hermiticity."""
        rotated = unitary @ self.matrix @ unitary.conj().T
        return Observable(matrix=(rotated + rotated.conj().T) / 2.0, label=label or self.label)

    def __sub__(self, other: "Observable") -> "Observable":
        return self.minus(other)

    def __add__(self, other: "Observable") -> "Observable":
        return self.plus(other)


class State(BaseModel):
    """
    A normalized pure state |phi> of dimension vector.shape[0].
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vector: np.ndarray = Field(..., description="Unit-norm complex vector")
    label: str = Field("phi", description="Short display name")

    @field_validator("vector", mode="before")
    @classmethod
    def _coerce_vector(cls, value: Any) -> CVector:
        return as_cvector(value)

    @model_validator(mode="after")
    def _check_normalized(self, info: ValidationInfo) -> "State":
        tolerance = _tolerances(info).normalization
        length = norm(self.vector)
        if abs(length - 1.0) > tolerance:
            raise NormalizationError(length, tolerance)
        return self

    @classmethod
    def build(cls, vector: Any, label: str = "phi", tolerances: Optional[Tolerances] = None) -> "State":
        context = {"tolerances": tolerances} if tolerances is not None else None
        return cls.model_validate({"vector": vector, "label": label}, context=context)

    @classmethod
    def normalize(cls, vector: Any, label: str = "phi") -> "State":
        """Scale `vector` to unit norm; a zero vector is rejected."""
        raw = as_cvector(vector)
        length = norm(raw)
        if length <= np.finfo(float).tiny:
            raise NormalizationError(length, DEFAULT_TOLERANCES.normalization)
        return cls(vector=raw / length, label=label)

    @classmethod
    def basis(cls, dim: int, index: int, label: Optional[str] = None) -> "State":
        return cls(vector=basis_vector(dim, index), label=label or f"|{index}>")

    @property
    def dim(self) -> int:
        return int(self.vector.shape[0])

    def rotated(self, unitary: CMatrix, label: Optional[str] = None) -> "State":
        return State.normalize(unitary @ self.vector, label=label or self.label)


class DeviationVector(BaseModel):
    """
    delta_phi(F)|phi> = (F - <F>_phi I)|phi>, tagged with its sources.
    Its squared norm is the variance of F in phi.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vector: np.ndarray
    observable_label: str
    state_label: str

    @field_validator("vector", mode="before")
    @classmethod
    def _coerce_vector(cls, value: Any) -> CVector:
        return as_cvector(value)

    @property
    def dim(self) -> int:
        return int(self.vector.shape[0])

    @property
    def squared_norm(self) -> float:
        return norm(self.vector) ** 2


def _same_dim(left: Observable, right: Observable) -> None:
    if left.dim != right.dim:
        raise DimensionMismatchError(left.dim, right.dim, f"{left.label}, {right.label}")


__all__ = ["DeviationVector", "Observable", "State"]
