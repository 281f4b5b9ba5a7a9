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

"""M-PSK alphabet, differential encoding and the relay's non-coherent detector.

Symbol indices follow the usual 1-based convention x_1, ..., x_M on the public
functions. The batch helpers used by the Monte-Carlo engine work with 0-based
indices on numpy arrays.
"""

import logging
from dataclasses import dataclass

import numpy as np

LOG = logging.getLogger(__name__)


class PskAlphabet:
    """The M-PSK alphabet x_m = exp(j2pi(m-1)/M), m = 1..M."""

    def __init__(self, M):
        """Initialize the alphabet for modulation size M."""
        if int(M) != M or M < 2:
            raise ValueError("Modulation size must be an integer >= 2, got %s" % str(M))
        self.M = int(M)
        if self.M & (self.M - 1):
            LOG.debug("Modulation size %d is not a power of two", self.M)
        self.symbols = np.exp(2j * np.pi * np.arange(self.M) / self.M)
        self.symbols[0] = 1.0 + 0.0j

    def __len__(self):
        """Return the modulation size."""
        return self.M

    def __repr__(self):
        """Represent the alphabet."""
        return "PskAlphabet(M=%d)" % self.M

    def symbol(self, index):
        """Get the symbol with the 1-based *index*."""
        self._check_indices(index)
        return self.symbols[np.asarray(index) - 1]

    def index_of(self, value):
        """Get the 1-based index of the symbol closest to *value*."""
        value = np.asarray(value)
        distances = np.abs(value[..., np.newaxis] - self.symbols)
        return np.argmin(distances, axis=-1) + 1

    def _check_indices(self, indices):
        indices = np.asarray(indices)
        if indices.size and (indices.min() < 1 or indices.max() > self.M):
            raise ValueError("Symbol indices must be in [1, %d]" % self.M)


@dataclass
class SymbolStream:
    """A differentially encoded stream.

    *info* holds the 1-based information indices x[1..K] and *coded* the K+1
    transmitted symbols, starting with the initialization symbol u[0] = 1.
    """

    info: np.ndarray
    coded: np.ndarray

    @property
    def u0(self):
        """The initialization symbol."""
        return self.coded[0]


def mpsk_alphabet(M):
    """Construct the M-PSK alphabet."""
    return PskAlphabet(M)


def diff_encode(info, alphabet):
    """Differentially encode the 1-based information indices *info*.

    The coded symbols satisfy u[k] = u[k-1] x[k] with u[0] = 1. They are built
    from accumulated phase indices so that every coded symbol is exactly an
    alphabet member.
    """
    info = np.asarray(info, dtype=int)
    alphabet._check_indices(info)
    phases = np.concatenate([[0], np.cumsum(info - 1)]) % alphabet.M
    return SymbolStream(info=info, coded=alphabet.symbols[phases])


def encode_phase_indices(info0, M):
    """Differentially accumulate 0-based indices along the last axis.

    Returns the phase indices of u[0..K], with u[0] at phase 0.
    """
    info0 = np.asarray(info0)
    start = np.zeros(info0.shape[:-1] + (1,), dtype=info0.dtype)
    return np.concatenate([start, np.cumsum(info0, axis=-1)], axis=-1) % M


def relay_detect_batch(y_prev, y_curr, alphabet):
    """Non-coherent decisions on arrays of received pairs, 0-based.

    Maximizes Re{conj(y_curr) y_prev x_m}; numpy's argmax returns the first
    maximum, so ties go to the smallest index.
    """
    corr = np.conj(np.asarray(y_curr)) * np.asarray(y_prev)
    metrics = np.real(corr[..., np.newaxis] * alphabet.symbols)
    return np.argmax(metrics, axis=-1)


def relay_detect(y_prev, y_curr, alphabet):
    """Detect the information symbol from two consecutive received samples.

    Returns the 1-based index maximizing Re{conj(y_curr) y_prev x_m}.
    """
    return int(relay_detect_batch(y_prev, y_curr, alphabet)) + 1


def diff_decode(received, alphabet):
    """Detect every information symbol of a received stream, 1-based."""
    received = np.asarray(received)
    return relay_detect_batch(received[:-1], received[1:], alphabet) + 1
