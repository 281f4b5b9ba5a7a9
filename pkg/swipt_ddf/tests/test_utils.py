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

"""Unit testing the utility functions."""

import json
from datetime import datetime
from pathlib import Path

import numpy as np
import pytest

from swipt_ddf.utils import UnitConverter, db_to_linear, dumps_json, fingerprint, json_serial, linear_to_db


def test_json_serial():
    """Test the json_serial function."""
    dtime_obj = datetime(2021, 4, 7, 11, 58, 53, 200000)
    res = json_serial(dtime_obj)

    assert res == "2021-04-07T11:58:53.200000"
    assert json_serial(np.int64(7)) == 7
    assert json_serial(np.float32(0.5)) == 0.5
    assert json_serial(np.array([1, 2])) == [1, 2]
    assert json_serial(Path('/tmp/out.csv')) == '/tmp/out.csv'

    with pytest.raises(TypeError) as exec_info:
        other_obj = 1j
        res = json_serial(other_obj)

    exception_raised = exec_info.value

    assert str(exception_raised) == "Type <class 'complex'> not serializable"


def test_dumps_json_is_sorted_and_parsable():
    """Test the deterministic JSON dump."""
    text = dumps_json({'b': np.float64(0.25), 'a': [np.int32(1)]})
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {'a': [1], 'b': 0.25}


def test_fingerprint_is_stable():
    """Test the configuration hash ignores key order and sees value changes."""
    first = fingerprint({'snr_db': 30.0, 'M': 2})
    assert first == fingerprint({'M': 2, 'snr_db': 30.0})
    assert first != fingerprint({'M': 4, 'snr_db': 30.0})
    assert len(first) == 16


def test_db_conversions():
    """Test the decibel conversions."""
    assert db_to_linear(30.0) == pytest.approx(1000.0)
    np.testing.assert_allclose(db_to_linear(np.array([0.0, 10.0, -10.0])), [1.0, 10.0, 0.1])
    assert linear_to_db(100.0) == pytest.approx(20.0)
    assert UnitConverter().ureg is UnitConverter().ureg

    with pytest.raises(ValueError) as exec_info:
        linear_to_db(0.0)
    assert str(exec_info.value) == "Only positive power ratios can be expressed in dB"
