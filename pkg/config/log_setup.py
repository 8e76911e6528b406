import sys
from loguru import logger

from config.settings import LOG_FILE, LOG_LEVEL


def configure_logging(level: str = LOG_LEVEL, log_file: str = LOG_FILE) -> None:
    """Route loguru output to stderr and, when configured, to a rotating file."""
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function} - {message}",
    )
    if log_file:
        logger.add(log_file, level="DEBUG", rotation="10 MB", retention=5)
