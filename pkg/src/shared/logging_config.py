"""Centralized logging configuration for the project."""
import logging
import sys
from pathlib import Path
from typing import Optional

from .constants import LoggingConfig


def setup_logging(
    log_level: str = LoggingConfig.DEFAULT_LEVEL,
    log_file: Optional[str] = LoggingConfig.DEFAULT_LOG_FILE,
    enable_console: bool = True,
    enable_file: bool = False
) -> None:
    """
    Configure logging for the whole application.

    The console handler writes to stderr so that command results on stdout
    stay machine-readable.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Log file name inside ``logs/`` (None disables it)
        enable_console: Enable console output
        enable_file: Enable file output
    """
    level_name = log_level.upper()
    if level_name not in LoggingConfig.VALID_LEVELS:
        level_name = LoggingConfig.DEFAULT_LEVEL
    level = getattr(logging, level_name)

    formatter = logging.Formatter(
        LoggingConfig.DEFAULT_FORMAT,
        datefmt=LoggingConfig.DATE_FORMAT
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers.clear()

    if enable_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

    if enable_file and log_file:
        log_dir = Path(LoggingConfig.LOG_DIR)
        log_dir.mkdir(exist_ok=True)

        file_handler = logging.FileHandler(
            log_dir / log_file,
            mode='a',
            encoding='utf-8'
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)


def configure_from_settings(log_level: Optional[str] = None) -> None:
    """Configure logging from the application settings."""
    from .config import settings
    setup_logging(
        log_level=log_level or settings.log_level,
        log_file=settings.log_file,
        enable_console=True,
        enable_file=settings.enable_detailed_logging
    )
