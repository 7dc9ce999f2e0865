"""
Numerical tolerances.

Every threshold used by the library lives in one frozen record so a run can be
reproduced from its configuration echo alone.
"""

from pydantic import BaseModel, Field


class Tolerances(BaseModel):
    """Absolute tolerances, applied after scaling to unit operator/vector size."""

    hermiticity: float = Field(1e-10, gt=0, description="Max |M[j][k] - conj(M[k][j])| for observables")
    normalization: float = Field(1e-10, gt=0, description="Max |norm - 1| for states")
    structural: float = Field(1e-10, gt=0, description="Eigen-decomposition and orthogonality checks")
    arithmetic: float = Field(1e-12, gt=0, description="Exact arithmetic identities (norms, conjugate symmetry)")
    expectation_imag: float = Field(1e-10, gt=0, description="Max imaginary residue of a Hermitian expectation")
    holds: float = Field(1e-10, gt=0, description="A relation holds when gap >= -holds * scale")
    undefined: float = Field(1e-9, gt=0, description="Threshold for vanishing norms and denominators")
    equality: float = Field(1e-8, gt=0, description="|gap| at or below this counts as saturation")

    model_config = {"frozen": True}

    def with_holds(self, holds: float) -> "Tolerances":
        return Tolerances(**{**self.model_dump(), "holds": holds})


DEFAULT_TOLERANCES = Tolerances()
