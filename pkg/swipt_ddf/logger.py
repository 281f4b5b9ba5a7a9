#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2024 The swipt-ddf developers

# Author(s):

#   The swipt-ddf developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Logging set-up of the command line runs.

Results are printed on standard output, so log records always go to stderr.
"""

import logging
import logging.config
import sys

import yaml

LOG_FORMAT = "[%(asctime)s %(levelname)-8s %(name)s] %(message)s"

# -v count -> root level
VERBOSITY_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

# third party loggers kept at INFO or above
QUIET_LOGGERS = ('pint',)


def verbosity_level(count):
    """Root level for a -v count, counts beyond -vv giving DEBUG."""
    count = min(max(count or 0, 0), len(VERBOSITY_LEVELS) - 1)
    return VERBOSITY_LEVELS[count]


def setup_logging(cmd_args):
    """Configure logging from the parsed command line.

    A yaml dictConfig file given with ``--log-config`` replaces the -v based
    set-up altogether.
    """
    log_config = getattr(cmd_args, 'log_config', None)
    if log_config is not None:
        with open(log_config) as fd:
            logging.config.dictConfig(yaml.safe_load(fd))
        return

    level = verbosity_level(getattr(cmd_args, 'verbosity', 0))
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root = logging.getLogger('')
    root.setLevel(level)
    root.addHandler(handler)
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(max(level, logging.INFO))
