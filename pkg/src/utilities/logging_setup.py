"""Logging configuration for the EcaSeq toolkit"""
import logging
from datetime import datetime
from pathlib import Path

from utilities.constants import APP_NAME


def init_logging(logs_path: Path | None, verbose: bool = False) -> logging.Logger:
    """Initialize logging configuration

    Args:
        logs_path: Directory where log files should be stored, or None for console only
        verbose: Lower the console threshold from WARNING to DEBUG

    Returns:
        Logger: Configured logger instance
    """
    logger = logging.getLogger(APP_NAME)
    logger.setLevel(logging.DEBUG)
    # Repeated invocations in one process (tests) must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    # File handler with debug level
    if logs_path is not None:
        log_file = logs_path / f"ecaseq_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
        logger.addHandler(file_handler)

    # Console handler on stderr; stdout is reserved for results
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    console_handler.setFormatter(logging.Formatter(
        "%(name)s - %(levelname)s - %(message)s"))
    logger.addHandler(console_handler)

    return logger
