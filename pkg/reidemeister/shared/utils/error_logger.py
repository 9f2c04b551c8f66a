"""
Centralized Error Logging Utility
Provides full traceback logging with context for easier debugging
"""

import traceback
from typing import Dict, Any, Optional

from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)


def log_full_error(
    error: Exception,
    context: Optional[Dict[str, Any]] = None,
    log_level: str = "error"
) -> None:
    """
    Log full traceback with context information for easier debugging

    Args:
        error: The exception that occurred
        context: Optional dictionary with additional context
                 (e.g., {'command': 'tbft', 'group_file': 's3.json'})
        log_level: Logging level ('error', 'warning', 'critical', 'debug')
    """
    full_traceback = "".join(traceback.format_exception(type(error), error, error.__traceback__))

    log_func = getattr(logger, log_level.lower(), logger.error)
    log_func(
        f"❌ ERROR: {type(error).__name__}",
        message=str(error),
        **(context or {}),
        traceback=full_traceback,
    )
