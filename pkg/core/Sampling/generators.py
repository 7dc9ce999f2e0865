"""
Random states, Hermitian matrices and unitaries.

Functions taking an `rng` draw from a caller-owned Generator so one instance
can be built from a single stream; the seed-taking wrappers own their stream.
"""

import math
from typing import Tuple, Union

import numpy as np

from ..exceptions import ConfigError, ValidationError
from ..Linalg import CMatrix, CVector
from ..Linalg.vectors import freeze
from ..Quantum import Observable, State
from .rng import make_rng

# stream words for the seed-taking wrappers
_STATE_STREAM = 101
_GUE_STREAM = 102
_PAIR_STREAM = 103


def _check_dim(dim: int, minimum: int = 2) -> int:
    if int(dim) < minimum:
        raise ValidationError(f"Dimension must be at least {minimum}, got {dim}", "dimension", dim=int(dim))
    return int(dim)


def complex_gaussian(rng: np.random.Generator, shape: Union[int, Tuple[int, ...]], std: float = 1.0) -> np.ndarray:
    """Complex normals with E|z|^2 = std^2: real and imaginary parts each have std / sqrt(2)."""
    part = std / math.sqrt(2.0)
    return rng.normal(scale=part, size=shape) + 1j * rng.normal(scale=part, size=shape)


def draw_haar_state(rng: np.random.Generator, dim: int, label: str = "phi") -> State:
    """2*dim standard normal reals as one complex vector, normalized."""
    dim = _check_dim(dim)
    reals = rng.standard_normal(2 * dim)
    return State.normalize(reals[:dim] + 1j * reals[dim:], label=label)


def draw_gue(rng: np.random.Generator, dim: int, scale: float = 1.0, label: str = "H") -> Observable:
    """(G + G^dagger)/2 with complex normal G of standard deviation `scale`; exactly Hermitian."""
    dim = _check_dim(dim)
    if not scale > 0:
        raise ConfigError(f"GUE scale must be positive, got {scale}", scale=scale)
    g = complex_gaussian(rng, (dim, dim), scale)
    return Observable(matrix=(g + g.conj().T) / 2.0, label=label)


def random_unitary(rng: np.random.Generator, dim: int) -> CMatrix:
    """
    Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
    of diag(R) moved into Q, so the factorization is unique.
    """
    q, r = np.linalg.qr(complex_gaussian(rng, (dim, dim)))
    diagonal = np.diagonal(r)
    phases = diagonal / np.abs(diagonal)
    return freeze(q * phases[np.newaxis, :])


def haar_state(dim: int, seed: int, label: str = "phi") -> State:
    return draw_haar_state(make_rng(seed, (_STATE_STREAM, dim)), dim, label)


def gue_hermitian(dim: int, seed: int, scale: float = 1.0, label: str = "H") -> Observable:
    return draw_gue(make_rng(seed, (_GUE_STREAM, dim)), dim, scale, label)


def bloch_state(theta: float, phi_angle: float, label: str = "phi") -> State:
    """(cos(theta/2), e^{i phi} sin(theta/2))."""
    return State(
        vector=[math.cos(theta / 2.0), complex(math.cos(phi_angle), math.sin(phi_angle)) * math.sin(theta / 2.0)],
        label=label,
    )


def random_vector_pair(dim: int, seed: int) -> Tuple[CVector, CVector]:
    """
    Two unnormalized complex vectors. Each is a complex Gaussian direction
    scaled by 10**u, u uniform in [-1, 1], so norm ratios span two decades.
    """
    dim = _check_dim(dim, minimum=1)
    rng = make_rng(seed, (_PAIR_STREAM, dim))
    pair = []
    for _ in range(2):
        direction = complex_gaussian(rng, dim)
        magnitude = 10.0 ** rng.uniform(-1.0, 1.0)
        pair.append(freeze(magnitude * direction / np.linalg.norm(direction)))
    return pair[0], pair[1]
