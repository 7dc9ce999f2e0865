from .vectors import (
    CMatrix,
    CVector,
    adjoint,
    as_cmatrix,
    as_cvector,
    basis_vector,
    frobenius_norm,
    hermitian_part,
    hermiticity_defect,
    identity,
    inner,
    matvec,
    norm,
    outer,
    require_same_dim,
)
from .jacobi import EigenDecomposition, eig_hermitian

__all__ = [
    "CMatrix",
    "CVector",
    "EigenDecomposition",
    "adjoint",
    "as_cmatrix",
    "as_cvector",
    "basis_vector",
    "eig_hermitian",
    "frobenius_norm",
    "hermitian_part",
    "hermiticity_defect",
    "identity",
    "inner",
    "matvec",
    "norm",
    "outer",
    "require_same_dim",
]
