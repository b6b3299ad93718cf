import logging
from pathlib import Path
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def setup_logger(
    logger_name: str = "spin_chain_memory",
    log_filepath: Optional[Path] = Path("console.log"),
    level: int = logging.INFO,
) -> logging.Logger:
    """
    Set up a named logger with a console handler and, optionally, a file handler.

    Calling this twice for the same name replaces the handlers instead of stacking them,
    so an experiment re-run in the same process does not print every message twice.

    Parameters:
        logger_name (str): Name of the logger.
        log_filepath (Path, optional): Path to the log file. None logs to the console only.
        level (int): Logging level for the logger and its handlers.

    Returns:
        logging.Logger: Configured logger.
    """
    logger = logging.getLogger(logger_name)
    logger.setLevel(level)

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATEFMT)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_filepath is not None:
        log_filepath = Path(log_filepath)
        log_filepath.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_filepath)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.propagate = False
    return logger


def setup_default_logger() -> logging.Logger:
    """
    Set up the shared "default" logger with a console handler.

    Returns:
        logger (logging.Logger): The default logger.
    """
    logger = logging.getLogger("default")
    logger.setLevel(logging.INFO)

    # Check if the logger already has handlers to avoid duplicate messages
    if not logger.hasHandlers():
        console_handler = logging.StreamHandler()
        console_handler.setLevel(logging.INFO)
        console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT))
        logger.addHandler(console_handler)

    return logger
