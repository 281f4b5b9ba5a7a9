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

"""
Command line runner of the SWIPT differential decode-and-forward toolkit.

Usage: swipt_ddf_runner.py {simulate,analyze,optimize,sweep,complexity,replay} [options]
"""

import logging
import sys

from swipt_ddf.cli import main as run_cli


logger = logging.getLogger('swipt_ddf_runner')


def main():
    """Run one command of the toolkit and exit with its status."""
    try:
        status = run_cli()
    except Exception as err:
        logger.error('The SWIPT DDF runner crashed: %s', str(err))
        sys.exit(1)
    sys.exit(status)


if __name__ == "__main__":
    main()
