"""
Pure states as 2*dim - 2 real parameters.

params[:dim-1] are hyperspherical half-angles for the magnitudes,
    r_0 = cos(t_1/2), r_1 = sin(t_1/2) cos(t_2/2), ..., r_{d-1} = prod_j sin(t_j/2),
params[dim-1:] are the relative phases of components 1..dim-1. The first
component is real, which gauges out the global phase. At dim = 2 this is the
Bloch parameterization (cos(t/2), e^{i p} sin(t/2)).
"""

from typing import Optional, Sequence

import numpy as np

from ..exceptions import ValidationError
from ..Quantum import State


def param_count(dim: int) -> int:
    return 2 * int(dim) - 2


def dim_for(count: int) -> int:
    if count < 2 or count % 2:
        raise ValidationError(
            f"Parameter count must be 2*dim - 2 for some dim >= 2, got {count}",
            "parameter_count",
            count=count,
        )
    return count // 2 + 1


def parameterize_state(params: Sequence[float], dim: Optional[int] = None, label: str = "phi") -> State:
    params = np.asarray(params, dtype=float)
    inferred = dim_for(params.size)
    if dim is not None and inferred != dim:
        raise ValidationError(
            f"Expected {param_count(dim)} parameters for dim {dim}, got {params.size}",
            "parameter_count",
            count=int(params.size),
        )
    halves = params[: inferred - 1] / 2.0
    phases = params[inferred - 1 :]

    magnitudes = np.empty(inferred)
    running = 1.0
    for k, half in enumerate(halves):
        magnitudes[k] = running * np.cos(half)
        running *= np.sin(half)
    magnitudes[-1] = running

    vector = magnitudes.astype(np.complex128)
    vector[1:] *= np.exp(1j * phases)
    return State(vector=vector, label=label)


def state_to_params(state: State) -> np.ndarray:
    """Inverse of parameterize_state, up to the global phase of `state`."""
    vector = state.vector
    reference = vector[0]
    if abs(reference) > 0.0:
        vector = vector * (np.conj(reference) / abs(reference))
    magnitudes = np.abs(vector)
    phases = np.angle(vector[1:])

    # tails[j] = ||magnitudes[j:]||
    tails = np.sqrt(np.cumsum((magnitudes ** 2)[::-1])[::-1])
    angles = 2.0 * np.arctan2(tails[1:], magnitudes[:-1])
    return np.concatenate([angles, phases])
