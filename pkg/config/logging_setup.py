import logging
import sys
from typing import Optional

from config.settings import load_settings

LOG_FORMAT = "%(name)s:%(levelname)s:%(message)s"


def configure_logging(verbosity: int = 0, stream=None) -> None:
    """Send engine logs to stderr; stdout is reserved for reports.

    verbosity 0 uses THETA_CALC_LOG_LEVEL (default WARNING), 1 is INFO, 2+ is DEBUG.
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, load_settings().log_level)

    root = logging.getLogger()
    handler: Optional[logging.Handler] = None
    for existing in root.handlers:
        if getattr(existing, "_theta_calc", False):
            handler = existing
    if handler is None:
        handler = logging.StreamHandler(stream or sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._theta_calc = True
        root.addHandler(handler)
    root.setLevel(level)
