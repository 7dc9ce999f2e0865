"""
Hermitian eigensolver based on cyclic Jacobi rotations.

Each rotation zeroes one off-diagonal pair (p, q). For the block
[[a, z], [conj(z), b]] with z = r e^{i phi}, the real symmetric rotation
(c, s) for [[a, r], [r, b]] is combined with the phase diag(1, e^{-i phi}),
giving the unitary G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] with
G^dagger M G diagonal on the block.

Sweeps repeat until the off-diagonal Frobenius mass is below machine
precision relative to ||M||_F. Output is ascending and deterministic.
"""

import math
from typing import List, Tuple

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict

from ..exceptions import NonHermitianError, NumericalIntegrityError
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .vectors import CMatrix, CVector, freeze, as_cmatrix, frobenius_norm, hermiticity_defect

logger = structlog.get_logger(__name__)

MAX_SWEEPS = 100


class EigenDecomposition(BaseModel):
    """
    Ascending eigenvalues with orthonormal eigenvectors stored as columns.
    Ordering inside a degenerate cluster is unspecified.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.shape[0])

    def vector(self, index: int) -> CVector:
        return freeze(self.eigenvectors[:, index].copy())

    def pairs(self) -> List[Tuple[float, CVector]]:
        return [(float(self.eigenvalues[k]), self.vector(k)) for k in range(self.dim)]

    def projector(self, index: int) -> CMatrix:
        v = self.eigenvectors[:, index]
        return freeze(np.outer(v, v.conj()))

    def reconstruct(self) -> CMatrix:
        """Return sum_k lambda_k v_k v_k^dagger."""
        v = self.eigenvectors
        return freeze((v * self.eigenvalues) @ v.conj().T)


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.sqrt(max(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2), 0.0)))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    z = a[p, q]
    r = abs(z)
    phase = z / r
    app = a[p, p].real
    aqq = a[q, q].real
    tau = (aqq - app) / (2.0 * r)
    if tau >= 0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    g = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]], dtype=np.complex128)
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = g.conj().T @ a[idx, :]
    v[:, idx] = v[:, idx] @ g
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def eig_hermitian(m: CMatrix, tolerances: Tolerances = DEFAULT_TOLERANCES) -> EigenDecomposition:
    """
    Diagonalize a Hermitian matrix.

    Raises:
        NonHermitianError: if hermiticity_defect(m) exceeds tolerances.hermiticity
    """
    m = as_cmatrix(m)
    defect = hermiticity_defect(m)
    if defect > tolerances.hermiticity:
        raise NonHermitianError(defect, tolerances.hermiticity)

    dim = m.shape[0]
    a = np.array((m + m.conj().T) / 2.0)
    v = np.eye(dim, dtype=np.complex128)
    scale = frobenius_norm(m)
    target = np.finfo(float).eps * max(scale, np.finfo(float).tiny)

    sweeps = 0
    residual = _off_diagonal_norm(a)
    while residual > target and sweeps < MAX_SWEEPS:
        sweeps += 1
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                if abs(a[p, q]) > np.finfo(float).tiny:
                    _rotate(a, v, p, q)
        previous, residual = residual, _off_diagonal_norm(a)
        # rounding floor reached
        if residual >= previous:
            break

    if residual > tolerances.structural * (1.0 + scale):
        raise NumericalIntegrityError("Jacobi iteration did not converge", residual, tolerances.structural)
    logger.debug("Jacobi diagonalization finished", dim=dim, sweeps=sweeps, off_diagonal=residual)

    values = np.diag(a).real
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(
        eigenvalues=freeze(values[order].copy()),
        eigenvectors=freeze(v[:, order].copy()),
    )
