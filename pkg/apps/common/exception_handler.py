"""
Exception handler for the command-line harness.

This module converts raised exceptions into the exit-code contract
(0 ok, 1 numerical violation, 2 input/config error) and a consistent
error payload on stderr.
"""

import pydantic
import structlog

from core.exceptions import ExitCode, RevboundError

from .output import stderr_console

logger = structlog.get_logger(__name__)


def exception_payload(exc: BaseException) -> dict:
    """
    Error payload for any exception.

    Args:
        exc: The exception instance

    Returns:
        Dictionary with error details and the exit code
    """
    if isinstance(exc, RevboundError):
        return exc.to_dict()
    if isinstance(exc, pydantic.ValidationError):
        return {
            'error': f'Invalid {exc.title}',
            'detail': str(exc),
            'error_code': 'SchemaError',
            'exit_code': int(ExitCode.INPUT_ERROR),
            'errors': [
                {'loc': [str(part) for part in error['loc']], 'msg': error['msg']}
                for error in exc.errors(include_url=False)
            ],
        }
    return {
        'error': str(exc) or exc.__class__.__name__,
        'detail': repr(exc),
        'error_code': exc.__class__.__name__,
        'exit_code': int(ExitCode.INPUT_ERROR),
    }


def handle_exception(exc: BaseException) -> int:
    """
    Report `exc` on stderr and return the process exit code for it.

    Our own exceptions carry their code; schema errors are input errors;
    anything unexpected is logged with its traceback and reported as exit 2.
    """
    payload = exception_payload(exc)
    if isinstance(exc, RevboundError):
        logger.warning("Command failed", error_code=exc.error_code, exit_code=int(exc.exit_code))
    elif isinstance(exc, pydantic.ValidationError):
        logger.warning("Command input failed schema validation", errors=exc.error_count())
    else:
        logger.exception("Unexpected error", error=str(exc))

    stderr_console.print(f"[bold red]error:[/bold red] {payload['error']}", markup=True)
    if payload.get('detail') and payload['detail'] != payload['error']:
        stderr_console.print(payload['detail'], markup=False)
    return int(payload['exit_code'])
