"""Structured logging setup using structlog."""

import logging
import sys
from typing import Optional, TextIO

import structlog


def setup_logging(
    log_level: str = "WARNING", dev_mode: bool = False, stream: Optional[TextIO] = None
) -> None:
    """Configure structured logging.

    Output goes to stderr unless another stream is given; stdout is reserved for
    machine-readable command results.
    """
    stream = stream or sys.stderr
    log_level_int = getattr(logging, log_level.upper(), logging.WARNING)

    if dev_mode:
        # Development: pretty-printed output
        renderer = structlog.dev.ConsoleRenderer(colors=False)
    else:
        # Batch runs: JSON output for log aggregation
        renderer = structlog.processors.JSONRenderer()

    structlog.configure(
        processors=[
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=stream),
        wrapper_class=structlog.make_filtering_bound_logger(log_level_int),
        cache_logger_on_first_use=False,
    )

    logging.basicConfig(
        format="%(message)s",
        stream=stream,
        level=log_level_int,
    )


def get_logger(name: str = __name__) -> structlog.typing.FilteringBoundLogger:
    """Get a logger instance."""
    return structlog.get_logger(name)
