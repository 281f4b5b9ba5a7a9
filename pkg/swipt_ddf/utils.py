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

"""Utility functions for the SWIPT-DDF toolkit."""

import hashlib
import json
import logging
import pathlib
from datetime import date, datetime

import numpy as np
from pint import UnitRegistry

LOG = logging.getLogger(__name__)


def json_serial(obj):
    """JSON serializer for objects not serializable by default json code."""
    if isinstance(obj, (datetime, date)):
        return obj.isoformat()
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, pathlib.PurePath):
        return str(obj)
    raise TypeError("Type %s not serializable" % type(obj))


def dumps_json(obj):
    """Serialize to a deterministic, indented JSON string."""
    return json.dumps(obj, default=json_serial, sort_keys=True, indent=2)


def fingerprint(obj):
    """Short stable hash of a JSON-serializable object."""
    blob = json.dumps(obj, default=json_serial, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(blob.encode('utf-8')).hexdigest()[:16]


class UnitConverter:
    """Convert between decibels and linear power ratios using Pint."""

    _ureg = None

    def __init__(self):
        """Initialize the unit converter, sharing one registry per process."""
        if UnitConverter._ureg is None:
            UnitConverter._ureg = UnitRegistry()
        self.ureg = UnitConverter._ureg

    def db_to_linear(self, value_db):
        """Convert a power ratio in dB to a linear ratio."""
        quantity = self.ureg.Quantity(value_db, self.ureg.decibel)
        return quantity.to(self.ureg.dimensionless).magnitude

    def linear_to_db(self, value):
        """Convert a linear power ratio to dB."""
        if np.any(np.asarray(value) <= 0):
            raise ValueError("Only positive power ratios can be expressed in dB")
        quantity = self.ureg.Quantity(value, self.ureg.dimensionless)
        return quantity.to(self.ureg.decibel).magnitude


def db_to_linear(value_db):
    """Convert dB to a linear power ratio."""
    return UnitConverter().db_to_linear(value_db)


def linear_to_db(value):
    """Convert a linear power ratio to dB."""
    return UnitConverter().linear_to_db(value)
