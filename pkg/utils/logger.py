"""
Logging utility for the toolkit.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

LIBRARY_LOGGERS = ("cli", "core", "utils")


def setup_logger(
    name: str = "dirdim",
    log_path: Optional[str] = "data/logs/dirdim.log",
    level: str = "INFO",
    max_bytes: int = 10485760,  # 10MB
    backup_count: int = 5,
    console_level: Optional[str] = None,
) -> logging.Logger:
    """
    Setup and configure logger.

    Modules log under "cli.*", "core.*" and "utils.*"; those loggers are
    attached to the same handlers.

    Args:
        name: Logger name
        log_path: Path to log file (None disables the file handler)
        level: Logging level
        max_bytes: Maximum log file size before rotation
        backup_count: Number of backup files to keep
        console_level: Level for the stderr handler (defaults to level)

    Returns:
        Configured logger
    """
    numeric = getattr(logging, level.upper())
    formatter = logging.Formatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    handlers = []
    if log_path:
        log_dir = os.path.dirname(log_path)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir, exist_ok=True)

        file_handler = RotatingFileHandler(
            log_path,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding="utf-8",
        )
        file_handler.setLevel(numeric)
        handlers.append(file_handler)

    # stderr keeps stdout free for JSON documents
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, (console_level or level).upper()))
    handlers.append(console_handler)

    for handler in handlers:
        handler.setFormatter(formatter)

    logger = logging.getLogger(name)
    for target in (logger, *(logging.getLogger(pkg) for pkg in LIBRARY_LOGGERS)):
        target.setLevel(numeric)
        target.handlers.clear()
        target.propagate = False
        for handler in handlers:
            target.addHandler(handler)

    return logger
