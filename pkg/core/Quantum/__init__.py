from .models import DeviationVector, Observable, State
from .statistics import (
    are_uncorrelated,
    commutator_expectation,
    covariance,
    covariance_moment_form,
    deviation_vector,
    expectation,
    std_dev,
    symmetric_covariance,
    variance,
    variance_moment_form,
)

__all__ = [
    "DeviationVector",
    "Observable",
    "State",
    "are_uncorrelated",
    "commutator_expectation",
    "covariance",
    "covariance_moment_form",
    "deviation_vector",
    "expectation",
    "std_dev",
    "symmetric_covariance",
    "variance",
    "variance_moment_form",
]
