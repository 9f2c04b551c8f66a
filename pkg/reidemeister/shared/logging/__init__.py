"""
Structured logging setup shared by every module.

Logs are rendered to stderr so that command reports on stdout stay byte-identical.
"""

import logging
import sys

import structlog

_configured = False


def configure_logging(level: str = "WARNING", fmt: str = "console") -> None:
    """Wire structlog to the stdlib logging module (idempotent)"""
    global _configured

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(level.upper())

    if _configured:
        return

    renderer = structlog.processors.JSONRenderer() if fmt == "json" else structlog.dev.ConsoleRenderer(colors=False)
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    _configured = True


def get_logger(name: str):
    """Return a structlog logger bound to the module name"""
    return structlog.get_logger(name)
