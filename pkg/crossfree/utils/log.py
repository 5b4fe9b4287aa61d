# -*- mode:python; coding:utf-8 -*-

# Copyright (c) 2020 IBM Corp. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Common logging utilities."""
import argparse
import logging
import sys

# All modules log below the 'crossfree' root so that CLI level changes reach them.
_logger = logging.getLogger('crossfree')

_LOCATED_FORMAT = '%(asctime)s %(name)s:%(lineno)d %(levelname)s: %(message)s'

# Modules logging every rewrite step.
STEP_LOGGERS = ('crossfree.core.bypass', 'crossfree.core.chords', 'crossfree.core.supports')


class SpecificLevelFilter(logging.Filter):
    """
    Filter for the same level as provided by setLevel for a log handler.

    Python logs every level above the handler level to a destination. The filter caps a handler at one level so
    that INFO can go to stdout while ERROR goes to stderr without duplication.
    """

    def __init__(self, level: int) -> None:
        """Initialize providing maximum level to be pushed through the filter."""
        self._level = level

    def filter(self, log_record: logging.LogRecord) -> bool:  # noqa: A003
        """Filter log messages."""
        return log_record.levelno <= self._level


def set_global_logging_levels(level: int = logging.INFO) -> None:
    """Initialise logging.

    Should only be invoked by the CLI classes or similar.
    """
    _logger.handlers = []
    _logger.setLevel(level)

    console_out_handler = logging.StreamHandler(sys.stdout)
    console_out_handler.setLevel(logging.INFO)
    console_out_handler.addFilter(SpecificLevelFilter(logging.INFO))

    console_debug_handler = logging.StreamHandler(sys.stdout)
    console_debug_handler.setLevel(logging.DEBUG)
    console_debug_handler.addFilter(SpecificLevelFilter(logging.DEBUG))

    # warnings from the pipelines go to stderr with the errors
    console_error_handler = logging.StreamHandler(sys.stderr)
    console_error_handler.setLevel(logging.WARNING)

    located_formatter = logging.Formatter(_LOCATED_FORMAT)
    console_debug_handler.setFormatter(located_formatter)
    console_error_handler.setFormatter(located_formatter)

    _logger.addHandler(console_out_handler)
    _logger.addHandler(console_error_handler)
    _logger.addHandler(console_debug_handler)


def set_log_level_from_args(args: argparse.Namespace) -> None:
    """
    Set the log level from the verbosity flags.

    One -v turns on debug output for the commands. The rewrite pipelines log a line per step and stay at INFO until
    -v is given twice.
    """
    verbose = getattr(args, 'verbose', 0)
    set_global_logging_levels(logging.DEBUG if verbose > 0 else logging.INFO)
    step_level = logging.DEBUG if verbose > 1 else logging.INFO
    for name in STEP_LOGGERS:
        logging.getLogger(name).setLevel(step_level)
