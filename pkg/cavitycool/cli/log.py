# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Configure the cavitycool logger for the command line."""

import logging
import sys
from typing import List


_logger = logging.getLogger("cavitycool")

DETAILED_FORMAT = "%(name)s:%(lineno)d %(levelname)s: %(message)s"


class BelowLevelFilter(logging.Filter):
    """Pass only records below a level."""

    def __init__(self, level: int) -> None:
        super().__init__()
        self.level = level

    def filter(self, record: logging.LogRecord) -> bool:
        return record.levelno < self.level


def configure_logger(level: int = logging.INFO, propagate: bool = False) -> None:
    """Replace the handlers of the cavitycool logger and set its level."""
    _logger.propagate = propagate
    _logger.setLevel(level=level)
    for handler in list(_logger.handlers):
        _logger.removeHandler(handler)
    for handler in _handlers(detailed=level <= logging.DEBUG):
        _logger.addHandler(handler)


def _handlers(detailed: bool) -> List[logging.Handler]:
    # progress and results on stdout, warnings and errors on stderr
    stdout_handler = logging.StreamHandler(sys.stdout)
    stdout_handler.addFilter(BelowLevelFilter(logging.WARNING))

    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setLevel(logging.WARNING)

    formatter = logging.Formatter(DETAILED_FORMAT)
    stderr_handler.setFormatter(formatter)
    if detailed:
        stdout_handler.setFormatter(formatter)
    return [stdout_handler, stderr_handler]
