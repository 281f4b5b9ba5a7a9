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

"""Unit testing the special functions against quadrature oracles."""

import numpy as np
import pytest
from scipy import integrate

from swipt_ddf.specialfn import bessel_k1, exp_integral_e1, gamma_upper_0, q_approx_two_exp, q_function

LOG_GRID = np.logspace(-3, np.log10(50.0), 13)


def _k1_oracle(x):
    upper = np.arccosh(max(60.0 / x, 1.0)) + 1.0
    value, _ = integrate.quad(lambda t: np.exp(-x * np.cosh(t)) * np.cosh(t), 0.0, upper,
                              epsabs=0.0, epsrel=1e-13, limit=400)
    return value


def _e1_oracle(z):
    value, _ = integrate.quad(lambda s: np.exp(-np.exp(s)) * np.exp(s) / (np.exp(s) + z),
                              np.log(z) - 40.0, 5.0, epsabs=0.0, epsrel=1e-13, limit=400)
    return np.exp(-z) * value


def _q_oracle(x):
    if x < 0:
        return 1.0 - _q_oracle(-x)
    value, _ = integrate.quad(lambda t: np.exp(-t * t / 2.0) / np.sqrt(2.0 * np.pi), x, np.inf,
                              epsabs=1e-15, epsrel=1e-13, limit=400)
    return value


@pytest.mark.parametrize('x', LOG_GRID)
def test_bessel_k1_against_integral_representation(x):
    """Test K1 against its cosh integral representation."""
    assert bessel_k1(x) == pytest.approx(_k1_oracle(x), rel=1e-8)


@pytest.mark.parametrize('z', LOG_GRID)
def test_exp_integral_against_quadrature(z):
    """Test E1 and the order-zero upper incomplete gamma against quadrature."""
    assert exp_integral_e1(z) == pytest.approx(_e1_oracle(z), rel=1e-8)
    assert gamma_upper_0(z) == exp_integral_e1(z)


@pytest.mark.parametrize('x', [-3.0, -0.5, 0.0, 0.7, 2.0, 4.5, 8.0])
def test_q_function_against_quadrature(x):
    """Test the Gaussian tail probability."""
    assert abs(q_function(x) - _q_oracle(x)) < 1e-12


def test_q_function_properties():
    """Test symmetry and vectorization of Q."""
    x = np.linspace(-4, 4, 9)
    np.testing.assert_allclose(q_function(x) + q_function(-x), 1.0, atol=1e-15)
    assert q_function(0.0) == 0.5


def test_q_approx_error_profile():
    """Test the two-exponential approximation error on [1, 5] stays bounded."""
    x = np.linspace(1.0, 5.0, 401)
    rel_error = np.abs(q_approx_two_exp(x) - q_function(x)) / q_function(x)
    assert 0.2 < rel_error.max() < 0.3
    assert q_approx_two_exp(0.0) == pytest.approx(1.0 / 3.0)


def test_domain_errors():
    """Test the domain checks of the special functions."""
    with pytest.raises(ValueError) as exec_info:
        bessel_k1(0.0)
    assert str(exec_info.value) == "K1 requires a strictly positive argument"
    with pytest.raises(ValueError):
        exp_integral_e1(np.array([1.0, -2.0]))
    with pytest.raises(ValueError) as exec_info:
        q_approx_two_exp(-0.1)
    assert str(exec_info.value) == "The two-exponential Q approximation is only defined for x >= 0"
