"""
Structured logging for hodge-games

Log records go to stderr; stdout carries reports only.
"""
import logging
import sys
from typing import Any, MutableMapping, Optional

import numpy as np
import structlog
from structlog.stdlib import LoggerFactory

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _plain_values(_: Any, __: str, event_dict: MutableMapping[str, Any]) -> MutableMapping[str, Any]:
    """Replace numpy scalars and small arrays by builtin values"""
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            event_dict[key] = value.item()
        elif isinstance(value, np.ndarray) and value.size <= 16:
            event_dict[key] = value.tolist()
    return event_dict


def setup_logging(
    level: str = "WARNING",
    format_type: str = "text",
    log_file: Optional[str] = None,
) -> structlog.stdlib.BoundLogger:
    """
    Configure structlog on top of the stdlib root logger

    Args:
        level: One of DEBUG, INFO, WARNING, ERROR, CRITICAL
        format_type: "json" for one JSON object per line, anything else for console text
        log_file: Optional file receiving the same records

    Returns:
        Root bound logger
    """
    level = level.upper()
    if level not in LEVELS:
        level = "WARNING"

    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level, force=True)
    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter("%(message)s"))
        logging.getLogger().addHandler(file_handler)

    processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        _plain_values,
        structlog.processors.format_exc_info,
    ]
    if format_type == "json":
        processors += [structlog.processors.TimeStamper(fmt="iso"), structlog.processors.JSONRenderer()]
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )
    return structlog.get_logger()


def bind_run_context(**values: Any) -> None:
    """Attach command and seed to every record of the current run"""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**values)


def get_logger(name: Optional[str] = None) -> structlog.stdlib.BoundLogger:
    if name:
        return structlog.get_logger(name)
    return structlog.get_logger()
