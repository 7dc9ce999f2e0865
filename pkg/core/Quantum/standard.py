"""
Standard observables and states: Pauli matrices and the qubit basis.
"""

import math

from .models import Observable, State

PAULI_X = Observable(matrix=[[0, 1], [1, 0]], label="sx")
PAULI_Y = Observable(matrix=[[0, -1j], [1j, 0]], label="sy")
PAULI_Z = Observable(matrix=[[1, 0], [0, -1]], label="sz")

KET_0 = State(vector=[1, 0], label="|0>")
KET_PLUS = State(vector=[1 / math.sqrt(2), 1 / math.sqrt(2)], label="|+>")


def pauli(axis: str) -> Observable:
    """Return the Pauli observable for axis 'x', 'y' or 'z'."""
    return {"x": PAULI_X, "y": PAULI_Y, "z": PAULI_Z}[axis.lower()]


def transition(dim: int, j: int, k: int, amplitude: float = 1.0, label: str = "T") -> Observable:
    """Return amplitude * (|j><k| + |k><j|)."""
    matrix = [[0.0] * dim for _ in range(dim)]
    matrix[j][k] = amplitude
    matrix[k][j] = amplitude
    return Observable(matrix=matrix, label=label)
