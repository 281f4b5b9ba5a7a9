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

"""Destination detectors for the differential decode-and-forward network.

Every detector works on the correlation statistics ``c = conj(y[k]) y[k-1]``
of the S-D and R-D links. A candidate x then scores ``Re{c x}/sigma`` on a
link, sigma being the total noise variance N_1 + N_2 of that link.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from swipt_ddf.modem import PskAlphabet

LOG = logging.getLogger(__name__)

DETECTOR_KINDS = ('exact-mld', 'approx-mld', 'proposed')
SIMULATED_DETECTORS = ('exact-mld', 'proposed', 'sd-only')


@dataclass(frozen=True)
class DetectorInput:
    """Received pairs and side information for one destination decision."""

    y_sd_prev: complex
    y_sd_curr: complex
    y_rd_prev: complex
    y_rd_curr: complex
    sigma_sd: float
    sigma_rd: float
    epsilon: float
    eta: float
    alphabet: PskAlphabet

    def __post_init__(self):
        """Check the noise variances and the relay side information."""
        if not self.sigma_sd > 0 or not self.sigma_rd > 0:
            raise ValueError("sigma_sd and sigma_rd must be positive")
        if not 0 <= self.epsilon <= 1:
            raise ValueError("epsilon must be in [0, 1]")
        if self.eta < 0:
            raise ValueError("eta must be non-negative")

    @property
    def c_sd(self):
        """Correlation statistic of the S-D pair."""
        return np.conj(self.y_sd_curr) * self.y_sd_prev

    @property
    def c_rd(self):
        """Correlation statistic of the R-D pair."""
        return np.conj(self.y_rd_curr) * self.y_rd_prev


@dataclass(frozen=True)
class OpCount:
    """Number of operations per symbol detection."""

    additions: int
    multiplications: int
    bessel_evals: int
    table_lookups: int

    def __post_init__(self):
        """Counts are non-negative."""
        if min(self.additions, self.multiplications, self.bessel_evals, self.table_lookups) < 0:
            raise ValueError("Operation counts must be non-negative")


def _link_metrics(corr, sigma, symbols):
    corr = np.asarray(corr)
    sigma = np.asarray(sigma, dtype=float)[..., np.newaxis]
    return np.real(corr[..., np.newaxis] * symbols) / sigma


def proposed_decisions(c_sd, c_rd, sigma_sd, sigma_rd, eta, symbols):
    """Max-sum decisions, 0-based.

    The relay branch is max(m_rd(x_s) + eta, max_x m_rd(x)); the inner
    maximum is computed once for all candidates.
    """
    m_sd = _link_metrics(c_sd, sigma_sd, symbols)
    m_rd = _link_metrics(c_rd, sigma_rd, symbols)
    best_rd = m_rd.max(axis=-1, keepdims=True)
    eta = np.asarray(eta, dtype=float)[..., np.newaxis]
    return np.argmax(m_sd + np.maximum(m_rd + eta, best_rd), axis=-1)


def transition_log_probabilities(epsilon, M):
    """log Pr(x_r | x_s) as an M x M matrix (rows x_s, columns x_r)."""
    with np.errstate(divide='ignore'):
        log_right = np.log1p(-epsilon)
        log_wrong = np.log(epsilon / (M - 1))
    return np.where(np.eye(M, dtype=bool), log_right, log_wrong)


def exact_mld_decisions(c_sd, c_rd, sigma_sd, sigma_rd, epsilon, symbols):
    """Joint maximum-likelihood decisions, 0-based, evaluated in the log domain."""
    M = len(symbols)
    m_sd = _link_metrics(c_sd, sigma_sd, symbols)
    m_rd = _link_metrics(c_rd, sigma_rd, symbols)
    joint = transition_log_probabilities(epsilon, M) + m_rd[..., np.newaxis, :]
    return np.argmax(m_sd + logsumexp(joint, axis=-1), axis=-1)


def sd_only_decisions(c_sd, symbols):
    """Decisions ignoring the relay, 0-based."""
    return np.argmax(np.real(np.asarray(c_sd)[..., np.newaxis] * symbols), axis=-1)


def decide(kind, c_sd, c_rd, sigma_sd, sigma_rd, epsilon, eta, symbols):
    """Run the detector *kind* on arrays of correlation statistics."""
    if kind == 'proposed':
        return proposed_decisions(c_sd, c_rd, sigma_sd, sigma_rd, eta, symbols)
    if kind == 'exact-mld':
        return exact_mld_decisions(c_sd, c_rd, sigma_sd, sigma_rd, epsilon, symbols)
    if kind == 'sd-only':
        return sd_only_decisions(c_sd, symbols)
    raise ValueError("Unknown detector %s, use one of %s" % (kind, ', '.join(SIMULATED_DETECTORS)))


def detect_exact_mld(inp):
    """Joint MLD over (x_s, x_r); returns the 1-based index of x_s."""
    return int(exact_mld_decisions(inp.c_sd, inp.c_rd, inp.sigma_sd, inp.sigma_rd, inp.epsilon,
                                   inp.alphabet.symbols)) + 1


def detect_proposed(inp):
    """Linear-complexity detector; returns the 1-based index of x_s."""
    return int(proposed_decisions(inp.c_sd, inp.c_rd, inp.sigma_sd, inp.sigma_rd, inp.eta,
                                  inp.alphabet.symbols)) + 1


def detect_sd_only(inp):
    """Relay-ignoring detector; returns the 1-based index of x_s."""
    return int(sd_only_decisions(inp.c_sd, inp.alphabet.symbols)) + 1


def count_operations(M, detector, S=1):
    """Operations per symbol detection for a detector kind.

    *S* is the number of Riemann subintervals of the exact MLD integral and
    only affects that row.
    """
    if int(M) != M or M < 2:
        raise ValueError("M must be an integer >= 2")
    if int(S) != S or S < 1:
        raise ValueError("S must be a positive integer")
    M, S = int(M), int(S)
    if detector == 'exact-mld':
        return OpCount(M * (7 * M * S + 7 * M), M * (15 * M * S + 20 * M + 8), M * M, M * (4 * M * S + M + 1))
    if detector == 'approx-mld':
        return OpCount(41 * M, 78 * M, 4 * M, 13 * M)
    if detector == 'proposed':
        return OpCount(8 * M, 14 * M, 0, 1)
    if detector == 'sd-only':
        return OpCount(2 * M, 4 * M, 0, 0)
    raise ValueError("Unknown detector %s, use one of %s" % (detector, ', '.join(DETECTOR_KINDS + ('sd-only',))))
