"""
Unified logging configuration using structlog.

This module provides a single source of truth for logging configuration
shared by the CLI commands, the sweep workers and the test suite.

Console output is colored and goes to stderr, so stdout stays reserved for
command output. File output (opt-in) is structured JSON lines in
logs/revbound.jsonl, rotated daily.
"""

# Import stdlib logging explicitly to avoid shadowing issues
import logging as stdlib_logging
import logging.config
import sys
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Any, Dict, Optional, Union

import structlog

logging = stdlib_logging

LOG_FILE_NAME = "revbound.jsonl"


class RevboundTimedRotatingFileHandler(TimedRotatingFileHandler):
    """
    Custom TimedRotatingFileHandler that accepts suffix in constructor.

    This allows the dictConfig below to set the suffix directly.
    """

    def __init__(self, filename, when='h', interval=1, backupCount=0, encoding=None,
                 delay=False, utc=False, atTime=None, suffix=None):
        super().__init__(filename, when, interval, backupCount, encoding, delay, utc, atTime)
        if suffix is not None:
            self.suffix = suffix


class StderrHandler(stdlib_logging.StreamHandler):
    """
    StreamHandler bound to whatever sys.stderr is at emit time, so output
    follows stream redirection (test runners swap sys.stderr per invocation).
    """

    def __init__(self):
        super().__init__(sys.stderr)

    def emit(self, record):
        self.stream = sys.stderr
        super().emit(record)


def _stderr_is_tty() -> bool:
    isatty = getattr(sys.stderr, "isatty", None)
    return bool(isatty and isatty())


def _shared_processors():
    return [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        structlog.processors.CallsiteParameterAdder(
            parameters=[
                structlog.processors.CallsiteParameter.FILENAME,
                structlog.processors.CallsiteParameter.LINENO
            ]
        ),
    ]


def setup_logging(
    log_dir: Optional[Union[str, Path]] = None,
    level: str = "WARNING",
    to_file: bool = False,
) -> Dict[str, Any]:
    """
    Configure structlog and return a logging.config.dictConfig dictionary.

    This function is idempotent - safe to call multiple times. structlog is
    configured once; the returned dict always reflects the arguments.

    Args:
        log_dir: Directory for log files (defaults to ./logs)
        level: Console log level name
        to_file: Also write JSON lines to log_dir/revbound.jsonl

    Returns:
        dict: logging configuration dictionary
    """
    level = level.upper()
    if not structlog.is_configured():
        structlog.configure(
            processors=_shared_processors() + [
                structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
            ],
            logger_factory=structlog.stdlib.LoggerFactory(),
            wrapper_class=structlog.stdlib.BoundLogger,
            context_class=dict,
            cache_logger_on_first_use=True,
        )

    handlers: Dict[str, Any] = {
        'console': {
            '()': 'app_logging.config.StderrHandler',
            'formatter': 'console',
            'level': level,
        },
    }
    if to_file:
        logs_dir = Path(log_dir) if log_dir is not None else Path.cwd() / "logs"
        logs_dir.mkdir(parents=True, exist_ok=True)
        handlers['file'] = {
            '()': 'app_logging.config.RevboundTimedRotatingFileHandler',
            'filename': str(logs_dir / LOG_FILE_NAME),
            'when': 'midnight',
            'interval': 1,
            'backupCount': 30,
            'encoding': 'utf-8',
            'utc': True,
            'suffix': '%Y-%m-%d.jsonl',
            'formatter': 'json',
            'level': 'DEBUG',
        }

    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'console': {
                '()': structlog.stdlib.ProcessorFormatter,
                'processor': structlog.dev.ConsoleRenderer(colors=_stderr_is_tty()),
                'foreign_pre_chain': _shared_processors(),
            },
            'json': {
                '()': structlog.stdlib.ProcessorFormatter,
                'processor': structlog.processors.JSONRenderer(),
                'foreign_pre_chain': _shared_processors(),
            },
        },
        'handlers': handlers,
        'root': {
            'handlers': list(handlers),
            'level': 'DEBUG' if to_file else level,
        },
    }


def configure_logging(
    log_dir: Optional[Union[str, Path]] = None,
    level: str = "WARNING",
    to_file: bool = False,
) -> None:
    """Apply setup_logging() to the stdlib logging tree."""
    logging.config.dictConfig(setup_logging(log_dir, level, to_file))
