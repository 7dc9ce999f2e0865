"""
Dense complex vectors and matrices for small dimensions.

Single Responsibility: coercion/validation of complex arrays and the handful of
products the rest of the library is built on. Values are read-only numpy
arrays, so they can be shared between threads freely.

Inner products follow the bra-ket convention: conjugate-linear in the first
argument, <v|w> = sum(conj(v_k) * w_k).
"""

import math
from typing import Any

import numpy as np
import numpy.typing as npt

from ..exceptions import DimensionMismatchError, NonFiniteError, NumericalIntegrityError, ShapeError
from ..tolerances import DEFAULT_TOLERANCES, Tolerances

CVector = npt.NDArray[np.complex128]
CMatrix = npt.NDArray[np.complex128]


def freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def as_cvector(entries: Any) -> CVector:
    """Copy `entries` into a read-only complex vector, rejecting bad shapes and NaN/Inf."""
    arr = np.array(entries, dtype=np.complex128)
    if arr.ndim != 1 or arr.size == 0:
        raise ShapeError(f"Expected a non-empty vector, got shape {arr.shape}", arr.shape)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("Vector")
    return freeze(arr)


def as_cmatrix(entries: Any) -> CMatrix:
    """Copy `entries` into a read-only square complex matrix, rejecting bad shapes and NaN/Inf."""
    arr = np.array(entries, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ShapeError(f"Expected a non-empty square matrix, got shape {arr.shape}", arr.shape)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("Matrix")
    return freeze(arr)


def require_same_dim(left: int, right: int, operation: str) -> None:
    if left != right:
        raise DimensionMismatchError(left, right, operation)


def inner(v: CVector, w: CVector) -> complex:
    """Return <v|w>."""
    require_same_dim(v.shape[0], w.shape[0], "inner")
    return complex(np.vdot(v, w))


def norm(v: CVector, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Return sqrt(Re <v|v>), asserting the imaginary part is negligible."""
    s = complex(np.vdot(v, v))
    if abs(s.imag) > tolerances.arithmetic * (1.0 + abs(s.real)):
        raise NumericalIntegrityError("Self inner product has an imaginary part", abs(s.imag), tolerances.arithmetic)
    return math.sqrt(max(s.real, 0.0))


def matvec(m: CMatrix, v: CVector) -> CVector:
    require_same_dim(m.shape[0], v.shape[0], "matvec")
    return freeze(m @ v)


def hermiticity_defect(m: CMatrix) -> float:
    """Return max_{j,k} |M[j][k] - conj(M[k][j])|."""
    return float(np.max(np.abs(m - m.conj().T)))


def frobenius_norm(m: CMatrix) -> float:
    return float(np.linalg.norm(m))


def adjoint(m: CMatrix) -> CMatrix:
    return freeze(m.conj().T.copy())


def identity(dim: int) -> CMatrix:
    return freeze(np.eye(dim, dtype=np.complex128))


def basis_vector(dim: int, index: int) -> CVector:
    if not 0 <= index < dim:
        raise ShapeError(f"Basis index {index} out of range for dimension {dim}")
    e = np.zeros(dim, dtype=np.complex128)
    e[index] = 1.0
    return freeze(e)


def outer(v: CVector, w: CVector) -> CMatrix:
    """Return |v><w|."""
    require_same_dim(v.shape[0], w.shape[0], "outer")
    return freeze(np.outer(v, w.conj()))


def hermitian_part(m: CMatrix) -> CMatrix:
    """Return (M + M^dagger)/2, exactly Hermitian in floating point."""
    return freeze((m + m.conj().T) / 2.0)
