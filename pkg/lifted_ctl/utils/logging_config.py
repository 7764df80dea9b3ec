"""
Logging Configuration for the lifted CTL checker
Provides structured JSON logging for debugging and monitoring
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Union

from pythonjsonlogger import jsonlogger

TEXT_FORMAT = '[%(asctime)s] [%(name)s] [%(levelname)s] %(message)s'
TEXT_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

LAYER_LOGGERS = (
    'lifted_ctl.logic',
    'lifted_ctl.models',
    'lifted_ctl.game',
    'lifted_ctl.verify',
    'lifted_ctl.oracle',
    'lifted_ctl.bench',
    'lifted_ctl.cli',
)


def _level_value(level: Union[int, str]) -> int:
    if isinstance(level, int):
        return level
    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level: {level}")
    return value


def setup_logging(
    level: Union[int, str] = logging.WARNING,
    log_format: str = "json",
    log_dir: Optional[Path] = None
) -> None:
    """
    Configure logging for the application.

    Console output goes to stderr so that reports on stdout stay
    byte-identical between runs.

    Args:
        level: Logging level (name or number)
        log_format: "json" for machine-readable records, "text" for plain lines
        log_dir: Optional directory for a daily log file
    """
    level = _level_value(level)

    if log_format == "json":
        formatter: logging.Formatter = jsonlogger.JsonFormatter(
            fmt='%(asctime)s %(levelname)s %(name)s %(message)s',
            rename_fields={'asctime': 'timestamp', 'levelname': 'level'},
            static_fields={'service': 'lifted_ctl'}
        )
    else:
        formatter = logging.Formatter(TEXT_FORMAT, datefmt=TEXT_DATE_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(level)

    root_logger = logging.getLogger('lifted_ctl')
    root_logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    root_logger.handlers.clear()
    root_logger.addHandler(console_handler)
    root_logger.propagate = False

    if log_dir is not None:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        log_file = log_dir / f"lifted_ctl_{datetime.now().strftime('%Y%m%d')}.log"
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(formatter)
        file_handler.setLevel(level)
        root_logger.addHandler(file_handler)

    for name in LAYER_LOGGERS:
        logging.getLogger(name).setLevel(level)

    root_logger.debug("Logging initialized", extra={'format': log_format})


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name: Logger name (e.g., 'lifted_ctl.game')

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)
