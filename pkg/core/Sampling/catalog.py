"""
Named worked instances.
"""

from typing import Callable, Dict

from ..exceptions import ConfigError
from ..Quantum import State
from ..Quantum.standard import KET_0, KET_PLUS, PAULI_X, PAULI_Y, PAULI_Z, transition
from .instances import InstanceSpec, explicit_instance


def qubit_sx_sz() -> InstanceSpec:
    """(sx, sz, |0>): REV_COV saturates, REV_DW is undefined since |0> is an sz eigenvector."""
    return explicit_instance(PAULI_X, PAULI_Z, KET_0)


def qubit_sz_sy() -> InstanceSpec:
    """(sz, sy, |+>): cov = Re C vanishes and dA = dB, so REV_DW saturates; C = -i keeps REV_COV slack."""
    return explicit_instance(PAULI_Z, PAULI_Y, KET_PLUS)


def qubit_sx_sy() -> InstanceSpec:
    """(sx, sy, |0>): a minimum-uncertainty state for Robertson."""
    return explicit_instance(PAULI_X, PAULI_Y, KET_0)


def qutrit_uncorrelated(a: float = 1.0, b: float = 1.0) -> InstanceSpec:
    """A = a(|0><1| + |1><0|), B = b(|0><2| + |2><0|), phi = |0>: orthogonal deviation vectors."""
    return explicit_instance(
        transition(3, 0, 1, a, label="A"),
        transition(3, 0, 2, b, label="B"),
        State.basis(3, 0),
    )


CATALOG: Dict[str, Callable[[], InstanceSpec]] = {
    "qubit-sx-sz": qubit_sx_sz,
    "qubit-sz-sy": qubit_sz_sy,
    "qubit-sx-sy": qubit_sx_sy,
    "qutrit-uncorrelated": qutrit_uncorrelated,
}


def named_instance(name: str) -> InstanceSpec:
    try:
        return CATALOG[name]()
    except KeyError:
        raise ConfigError(f"Unknown example '{name}'", available=sorted(CATALOG)) from None
