# Copyright (c) 2026 The hexec Authors. All rights reserved.
# NOTE:
# Do not import external packages in common modules.
# Only import hexec modules that are also in common.

import logging
import sys
import traceback
from typing import Callable, List, Tuple

from hexec.common.results import HexecExceptionInternalError

LOGGER_NAME = "hexec"
LOG_FILENAME = "hexec.log"

LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}

default_logging_level_file = logging.DEBUG
default_logging_level_stdout = logging.INFO

# Handlers installed by init_global_logging, removed by stop_global_logging.
_handlers: List[logging.Handler] = []


def reset_log(filename: str = None):
    with open(filename or LOG_FILENAME, "w"):
        pass


def str_to_log_level(level: str) -> int:
    try:
        return LOG_LEVELS[level]
    except KeyError:
        raise HexecExceptionInternalError(f"Unknown log level {level}") from None


def set_default_logging_levels(file_level: str, stdout_level: str):
    global default_logging_level_file
    global default_logging_level_stdout
    default_logging_level_file = str_to_log_level(file_level)
    default_logging_level_stdout = str_to_log_level(stdout_level)


class SmartLoggingFormatter(logging.Formatter):
    """
    Plain lines for files. On a terminal stream, warnings and errors are
    coloured and messages starting with ">" are printed as bold green headings.
    """

    RED = "\033[1;31m"
    GREEN = "\033[1;32m"
    YELLOW = "\033[1;33m"
    RESET = "\033[0m"
    BOLD = "\033[1m"

    default_format = "%(asctime)s %(process)-10.10s %(levelname)-8.8s  %(message)s (%(filename)s:%(lineno)d)"

    level_colours = {
        logging.WARNING: YELLOW,
        logging.ERROR: RED,
        logging.CRITICAL: BOLD + RED,
    }

    def __init__(self, stream: bool = False):
        super().__init__(self.default_format)
        self.stream = stream

    def _colour(self, record) -> str:
        if isinstance(record.msg, str) and record.msg.startswith(">"):
            return self.BOLD + self.GREEN
        return self.level_colours.get(record.levelno, "")

    def format(self, record):
        text = super().format(record)
        if not self.stream:
            return text
        colour = self._colour(record)
        if colour:
            return self.RESET + colour + text + self.RESET
        return self.RESET + text


def _stream_handler(keep: Callable[[logging.LogRecord], bool]) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.addFilter(keep)
    handler.setFormatter(SmartLoggingFormatter(stream=True))
    return handler


def _log_uncaught(logger: logging.Logger):
    def log_exceptions(type, value, tb):
        lines = [
            line.strip()
            for line in traceback.TracebackException(type, value, tb).format(chain=True)
            if line.strip()
        ]
        logger.critical("\n".join(lines))

    return log_exceptions


def init_logging(
    name: str,
    filename: str,
    filemode: str,
    file_level: int = None,
    add_stream_handlers: bool = True,
    stdout_level: int = None,
) -> Tuple[logging.Logger, List[logging.Handler]]:
    file_level = default_logging_level_file if file_level is None else file_level
    stdout_level = default_logging_level_stdout if stdout_level is None else stdout_level

    logger = logging.getLogger(name)
    handlers = []

    if filename:
        log_file = logging.FileHandler(filename, filemode, encoding="utf-8")
        log_file.setLevel(file_level)
        log_file.setFormatter(SmartLoggingFormatter())
        handlers.append(log_file)

    # Stdout carries command results only; progress and errors go to stderr.
    if add_stream_handlers:
        if hasattr(sys.stderr, "reconfigure"):
            sys.stderr.reconfigure(encoding="utf-8")
        handlers.append(_stream_handler(lambda r: r.levelno >= logging.ERROR))
        handlers.append(
            _stream_handler(lambda r: stdout_level <= r.levelno <= logging.WARNING)
        )

    for h in handlers:
        logger.addHandler(h)
    logger.setLevel(min(file_level, stdout_level))
    sys.excepthook = _log_uncaught(logger)

    return logger, handlers


def init_global_logging(filename: str = None):
    # run() may be called repeatedly in one process, so drop earlier handlers.
    stop_global_logging()
    _, handlers = init_logging(
        LOGGER_NAME,
        filename or LOG_FILENAME,
        "a",
        default_logging_level_file,
        True,
        default_logging_level_stdout,
    )
    _handlers.extend(handlers)
    logging.getLogger(LOGGER_NAME).debug("> Logging started")


def stop_global_logging():
    logger = logging.getLogger(LOGGER_NAME)
    while _handlers:
        h = _handlers.pop()
        logger.removeHandler(h)
        h.close()
    sys.excepthook = sys.__excepthook__
