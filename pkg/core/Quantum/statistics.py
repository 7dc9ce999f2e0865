"""
Expectation values, deviation vectors, variances and the quantum covariance.

The variance is computed as the squared norm of the deviation vector, which is
non-negative by construction; the moment form <F^2> - <F>^2 is kept as a
cross-check. Covariance is the inner product of the two deviation vectors,
C_phi(A, B) = <phi| dA dB |phi> = <dA phi | dB phi>, since dA is Hermitian.
"""

import math

import numpy as np

from ..exceptions import DimensionMismatchError, NumericalIntegrityError
from ..Linalg import norm
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .models import DeviationVector, Observable, State


def _check_dims(state: State, *observables: Observable) -> None:
    for observable in observables:
        if observable.dim != state.dim:
            raise DimensionMismatchError(observable.dim, state.dim, f"{observable.label} on {state.label}")


def _real_expectation(value: complex, scale: float, tolerances: Tolerances, what: str) -> float:
    allowed = tolerances.expectation_imag * (1.0 + scale)
    if abs(value.imag) > allowed:
        raise NumericalIntegrityError(f"Expectation of {what} has an imaginary residue", abs(value.imag), allowed)
    return value.real


def expectation(f: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Return Re <phi|F|phi>, asserting the imaginary residue is negligible."""
    _check_dims(phi, f)
    value = complex(np.vdot(phi.vector, f.matrix @ phi.vector))
    return _real_expectation(value, f.frobenius, tolerances, f.label)


def deviation_vector(f: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> DeviationVector:
    """Return (F - <F>_phi I)|phi>."""
    mean = expectation(f, phi, tolerances)
    return DeviationVector(
        vector=f.matrix @ phi.vector - mean * phi.vector,
        observable_label=f.label,
        state_label=phi.label,
    )


def variance(f: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Return ||delta_phi(F)|phi>||^2."""
    return norm(deviation_vector(f, phi, tolerances).vector) ** 2


def variance_moment_form(f: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Return <F^2>_phi - <F>_phi^2."""
    _check_dims(phi, f)
    f_phi = f.matrix @ phi.vector
    second = float(np.vdot(f_phi, f_phi).real)
    mean = expectation(f, phi, tolerances)
    return second - mean * mean


def std_dev(f: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    return math.sqrt(variance(f, phi, tolerances))


def covariance(a: Observable, b: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Return C_phi(A, B) = <phi| dA dB |phi>."""
    _check_dims(phi, a, b)
    psi1 = deviation_vector(a, phi, tolerances).vector
    psi2 = deviation_vector(b, phi, tolerances).vector
    return complex(np.vdot(psi1, psi2))


def covariance_moment_form(a: Observable, b: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Return <AB>_phi - <A>_phi <B>_phi."""
    _check_dims(phi, a, b)
    ab = complex(np.vdot(phi.vector, a.matrix @ (b.matrix @ phi.vector)))
    return ab - expectation(a, phi, tolerances) * expectation(b, phi, tolerances)


def symmetric_covariance(a: Observable, b: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Return cov_phi(A, B) = Re C_phi(A, B)."""
    return covariance(a, b, phi, tolerances).real


def commutator_expectation(a: Observable, b: Observable, phi: State) -> complex:
    """Return <phi|(AB - BA)|phi>; purely imaginary for Hermitian A, B."""
    _check_dims(phi, a, b)
    a_phi = a.matrix @ phi.vector
    b_phi = b.matrix @ phi.vector
    # <phi|AB|phi> = <A phi|B phi>, <phi|BA|phi> = <B phi|A phi>
    return complex(np.vdot(a_phi, b_phi) - np.vdot(b_phi, a_phi))


def are_uncorrelated(a: Observable, b: Observable, phi: State, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """True when the deviation vectors are orthogonal, i.e. C_phi(A, B) vanishes."""
    scale = 1.0 + a.frobenius * b.frobenius
    return abs(covariance(a, b, phi, tolerances)) <= tolerances.structural * scale
