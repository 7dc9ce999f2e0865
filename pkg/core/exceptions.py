"""
Common exceptions for revbound.

This module defines custom exception classes for consistent error handling
across the library and the command-line harness. Every exception carries the
process exit code the CLI reports for it.

Domain errors do not subclass ValueError: pydantic only wraps ValueError and
AssertionError raised inside validators, so these propagate unchanged.
"""

from enum import IntEnum
from typing import Any, Dict, Optional


class ExitCode(IntEnum):
    OK = 0
    VIOLATION = 1
    INPUT_ERROR = 2


class RevboundError(Exception):
    """
    Base exception class for all revbound errors.
    Provides a consistent error payload format.
    """

    def __init__(
        self,
        message: str,
        detail: Optional[str] = None,
        exit_code: ExitCode = ExitCode.INPUT_ERROR,
        error_code: Optional[str] = None,
        extra_data: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize the exception.

        Args:
            message: Human-readable error message
            detail: Detailed error information
            exit_code: Process exit code reported by the CLI
            error_code: Application-specific error code
            extra_data: Additional error data
        """
        self.message = message
        self.detail = detail or message
        self.exit_code = exit_code
        self.error_code = error_code or self.__class__.__name__
        self.extra_data = extra_data or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert exception to dictionary for CLI/JSON output.

        Returns:
            Dictionary with error information
        """
        result = {
            'error': self.message,
            'detail': self.detail,
            'error_code': self.error_code,
            'exit_code': int(self.exit_code),
        }
        if self.extra_data:
            result.update(self.extra_data)
        return result


class InputError(RevboundError):
    """Exception for malformed or unusable input (exit code 2)."""

    def __init__(self, message: str, detail: Optional[str] = None, extra_data: Optional[Dict[str, Any]] = None):
        super().__init__(message, detail, ExitCode.INPUT_ERROR, None, extra_data)


class ValidationError(InputError):
    """
    Exception for a violated construction invariant.
    The invariant name is exposed as `invariant` and in the payload.
    """

    def __init__(self, message: str, invariant: str, detail: Optional[str] = None, **extra: Any):
        super().__init__(message, detail, {'invariant': invariant, **extra})
        self.invariant = invariant


class ShapeError(ValidationError):
    """Exception for arrays that are not vectors/square matrices."""

    def __init__(self, message: str, shape: Any = None):
        super().__init__(message, 'shape', shape=list(shape) if shape is not None else None)


class NonFiniteError(ValidationError):
    """Exception for NaN/Inf entries."""

    def __init__(self, what: str):
        super().__init__(f'{what} contains non-finite entries', 'finite')


class DimensionMismatchError(ValidationError):
    """Exception for operands of different dimension."""

    def __init__(self, left: int, right: int, operation: Optional[str] = None):
        message = f'Dimension mismatch: {left} != {right}'
        if operation:
            message += f' in {operation}'
        super().__init__(message, 'dimension', left=left, right=right)
        self.left = left
        self.right = right


class NonHermitianError(ValidationError):
    """Exception for matrices whose hermiticity defect exceeds tolerance."""

    def __init__(self, defect: float, tolerance: float, label: Optional[str] = None):
        subject = f'Observable {label}' if label else 'Matrix'
        super().__init__(
            f'{subject} is not Hermitian: hermiticity defect {defect:.3e} > {tolerance:.1e}',
            'hermiticity',
            defect=defect,
            tolerance=tolerance,
        )
        self.defect = defect


class NormalizationError(ValidationError):
    """Exception for state vectors that are not normalized."""

    def __init__(self, norm: float, tolerance: float):
        super().__init__(
            f'State is not normalized: |norm - 1| = {abs(norm - 1.0):.3e} > {tolerance:.1e}',
            'normalization',
            norm=norm,
            tolerance=tolerance,
        )
        self.norm = norm


class ConfigError(RevboundError):
    """Exception for invalid configuration or flags (exit code 2)."""

    def __init__(self, message: str, detail: Optional[str] = None, **extra: Any):
        super().__init__(message, detail, ExitCode.INPUT_ERROR, 'ConfigError', extra)


class InstanceParseError(InputError):
    """Exception for instance files that cannot be read or parsed."""

    def __init__(self, path: str, detail: str):
        super().__init__(f'Cannot parse instance file: {path}', detail, {'path': path})
        self.path = path


class NumericalIntegrityError(RevboundError):
    """
    Exception for arithmetic results that contradict a structural guarantee,
    e.g. a non-negligible imaginary part of a Hermitian expectation value.
    """

    def __init__(self, message: str, residue: float, tolerance: float):
        super().__init__(
            message,
            None,
            ExitCode.VIOLATION,
            'NumericalIntegrityError',
            {'residue': residue, 'tolerance': tolerance},
        )
        self.residue = residue
