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

"""Fixtures for unittests."""

from unittest.mock import patch

import pytest

from swipt_ddf.channel import NetworkConfig

TEST_YAML_SCENARIO_CONTENT = """# Default geometry, four-PSK at 35 dB
network:
  snr_db: 35
  M: 4
  delta: 0.6
  d_sd: 3
  d_sr: 1.5
  d_rd: 1.5

protocol:
  protocol: PS
  rho: 0.7

sim:
  trials: 20000
  min_errors: 100
  seed: 42
  detectors: [proposed, sd-only]
"""

TEST_YAML_SCENARIO_BAD_VALUE = """network:
  snr_db: 30
  M: 4

protocol:
  protocol: PS
  rho: 1.5
"""

TEST_YAML_SCENARIO_UNKNOWN_KEY = """network:
  snr_db: 30
  distance_sd: 3
"""

TEST_YAML_SCENARIO_SYNTAX_ERROR = """network:
  snr_db: 30
   M: [4
"""

TEST_YAML_LOG_CONFIG = """version: 1
formatters:
  plain:
    format: '%(levelname)s %(message)s'
handlers:
  console:
    class: logging.StreamHandler
    formatter: plain
root:
  level: DEBUG
  handlers: [console]
"""


def _write(tmp_path, name, content):
    file_path = tmp_path / name
    with open(file_path, 'w') as fpt:
        fpt.write(content)
    return file_path


@pytest.fixture
def fake_yaml_scenario_file(tmp_path):
    """Write a valid scenario file."""
    yield _write(tmp_path, 'scenario.yaml', TEST_YAML_SCENARIO_CONTENT)


@pytest.fixture
def fake_yaml_scenario_bad_value(tmp_path):
    """Write a scenario file with an out of range ratio."""
    yield _write(tmp_path, 'bad_value.yaml', TEST_YAML_SCENARIO_BAD_VALUE)


@pytest.fixture
def fake_yaml_scenario_unknown_key(tmp_path):
    """Write a scenario file with an unknown key."""
    yield _write(tmp_path, 'unknown_key.yaml', TEST_YAML_SCENARIO_UNKNOWN_KEY)


@pytest.fixture
def fake_yaml_scenario_syntax_error(tmp_path):
    """Write a scenario file that is not valid yaml."""
    yield _write(tmp_path, 'broken.yaml', TEST_YAML_SCENARIO_SYNTAX_ERROR)


@pytest.fixture
def fake_yaml_log_config(tmp_path):
    """Write a dictConfig logging file."""
    yield _write(tmp_path, 'logging.yaml', TEST_YAML_LOG_CONFIG)


@pytest.fixture
def default_network():
    """Network with the default geometry at 30 dB and binary PSK."""
    return NetworkConfig()


@pytest.fixture
def run_cli():
    """Run the command line entry point without touching the root logger setup."""
    from swipt_ddf.cli import main

    def _run(*argv):
        with patch('swipt_ddf.cli.setup_logging'):
            return main(list(argv))
    return _run
