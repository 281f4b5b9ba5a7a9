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

"""Special functions used by the error-rate analysis.

Thin, vectorized wrappers around :mod:`scipy.special` with the domain checks
the analysis relies on.
"""

import numpy as np
from scipy import special


def _check_positive(name, value):
    if np.any(np.asarray(value) <= 0):
        raise ValueError("%s requires a strictly positive argument" % name)


def q_function(x):
    """Gaussian tail probability Q(x) = 0.5 erfc(x/sqrt(2))."""
    return 0.5 * special.erfc(np.asarray(x, dtype=float) / np.sqrt(2.0))


def q_approx_two_exp(x):
    """Two-exponential approximation (1/12)exp(-x^2/2) + (1/4)exp(-2x^2/3), x >= 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("The two-exponential Q approximation is only defined for x >= 0")
    xsq = x * x
    return np.exp(-xsq / 2.0) / 12.0 + np.exp(-2.0 * xsq / 3.0) / 4.0


def bessel_k1(x):
    """First-order modified Bessel function of the second kind, x > 0."""
    _check_positive("K1", x)
    return special.k1(x)


def exp_integral_e1(z):
    """Exponential integral E1(z), z > 0."""
    _check_positive("E1", z)
    return special.exp1(z)


def gamma_upper_0(z):
    """Upper incomplete gamma function of order zero, equal to E1(z)."""
    return exp_integral_e1(z)
