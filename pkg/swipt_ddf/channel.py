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

"""Path loss, Rayleigh fading, noise and the energy-harvesting power model.

The three-node network has a source S, an energy-harvesting relay R and a
destination D. Links are labelled 'sr', 'sd' and 'rd'. Every receiver sees the
antenna noise v1 and the baseband processing noise v2; on the power-splitting
ID branch at R only the antenna noise is scaled by sqrt(1 - rho).
"""

import logging
from dataclasses import asdict, dataclass, field, replace
from typing import Optional

import numpy as np

from swipt_ddf.utils import db_to_linear

LOG = logging.getLogger(__name__)

LINKS = ('sr', 'sd', 'rd')
PROTOCOLS = ('PS', 'TS')


def path_loss(d, nu=2.7):
    """Bounded path-loss gain L = 1/(1 + d^nu)."""
    d = np.asarray(d, dtype=float)
    if np.any(d < 0):
        raise ValueError("Distance must be non-negative")
    if nu <= 0:
        raise ValueError("Path-loss exponent must be positive")
    return 1.0 / (1.0 + d ** nu)


@dataclass(frozen=True)
class NetworkConfig:
    """Static scenario of the relay network.

    *noise_split* is either one pair of fractions of N_0 used on every link,
    or a mapping from link name to such a pair.
    """

    snr_db: float = 30.0
    M: int = 2
    delta: float = 0.6
    P_s: float = 1.0
    T_s: float = 1.0
    d_sd: float = 3.0
    d_sr: float = 1.5
    d_rd: float = 1.5
    pathloss_exponent: float = 2.7
    noise_split: object = (0.5, 0.5)
    N_0: Optional[float] = None

    def __post_init__(self):
        """Check the scenario."""
        if int(self.M) != self.M or self.M < 2:
            raise ValueError("M must be an integer >= 2, got %s" % str(self.M))
        if not 0 < self.delta <= 1:
            raise ValueError("delta must be in (0, 1], got %s" % str(self.delta))
        for name in ('P_s', 'T_s', 'd_sd', 'd_sr', 'd_rd', 'pathloss_exponent'):
            if not getattr(self, name) > 0:
                raise ValueError("%s must be positive, got %s" % (name, str(getattr(self, name))))
        if self.N_0 is not None and not self.N_0 > 0:
            raise ValueError("N_0 must be positive, got %s" % str(self.N_0))
        for link in LINKS:
            n1, n2 = self._split(link)
            if n1 < 0 or n2 < 0 or n1 + n2 <= 0:
                raise ValueError("Noise split of link %s must be non-negative with a positive sum" % link)

    def _split(self, link):
        if isinstance(self.noise_split, dict):
            return tuple(float(v) for v in self.noise_split.get(link, (0.5, 0.5)))
        return tuple(float(v) for v in self.noise_split)

    @property
    def snr(self):
        """Transmit SNR P_s/N_0 as a linear ratio."""
        if self.N_0 is not None:
            return self.P_s / self.N_0
        return float(db_to_linear(self.snr_db))

    @property
    def n0(self):
        """Total noise level N_0."""
        if self.N_0 is not None:
            return self.N_0
        return self.P_s / self.snr

    def distance(self, link):
        """Distance of a link."""
        return getattr(self, 'd_' + link)

    def link_gain(self, link):
        """Path-loss gain of a link."""
        return float(path_loss(self.distance(link), self.pathloss_exponent))

    @property
    def L_sd(self):
        """Path-loss gain of the S-D link."""
        return self.link_gain('sd')

    @property
    def L_sr(self):
        """Path-loss gain of the S-R link."""
        return self.link_gain('sr')

    @property
    def L_rd(self):
        """Path-loss gain of the R-D link."""
        return self.link_gain('rd')

    def noise_pair(self, link):
        """Antenna and processing noise levels (N_1, N_2) of a link."""
        n1, n2 = self._split(link)
        return n1 * self.n0, n2 * self.n0

    def sigma(self, link):
        """Total noise N_1 + N_2 of a link."""
        return sum(self.noise_pair(link))

    def replace(self, **changes):
        """Return a copy with some fields replaced."""
        return replace(self, **changes)

    def as_dict(self):
        """Plain dictionary of the configured fields."""
        return asdict(self)


@dataclass(frozen=True)
class ProtocolParams:
    """Energy-harvesting protocol and its ratio (rho for PS, alpha for TS)."""

    protocol: str = 'PS'
    ratio: float = 0.8

    def __post_init__(self):
        """Check the protocol and ratio."""
        object.__setattr__(self, 'protocol', str(self.protocol).upper())
        if self.protocol not in PROTOCOLS:
            raise ValueError("Unknown protocol %s, use one of %s" % (self.protocol, ', '.join(PROTOCOLS)))
        check_ratio(self.ratio, 'alpha' if self.protocol == 'TS' else 'rho')


def check_ratio(value, name='rho'):
    """Raise if a PS/TS ratio is not strictly inside (0, 1)."""
    value = np.asarray(value, dtype=float)
    if np.any(value <= 0) or np.any(value >= 1):
        raise ValueError("%s must be strictly between 0 and 1" % name)


def ts_slot_duration(alpha, cfg):
    """Duration of each information slot under time switching, (1 - alpha) T_s."""
    check_ratio(alpha, 'alpha')
    return (1.0 - alpha) * cfg.T_s


def sample_rayleigh(rng, size=None):
    """Draw Rayleigh fading coefficients with E|h|^2 = 1."""
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2.0)


def complex_noise(rng, variance, size=None):
    """Circularly symmetric complex Gaussian noise of the given variance."""
    return np.sqrt(variance / 2.0) * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


@dataclass(frozen=True)
class ChannelRealization:
    """One draw of the small-scale fading coefficients."""

    h_sr: complex
    h_sd: complex
    h_rd: complex

    @classmethod
    def draw(cls, rng):
        """Draw the three coefficients independently."""
        h_sr, h_sd, h_rd = sample_rayleigh(rng, 3)
        return cls(h_sr=h_sr, h_sd=h_sd, h_rd=h_rd)

    def coefficient(self, link):
        """Fading coefficient of a link."""
        return getattr(self, 'h_' + link)

    def gamma(self, link, cfg):
        """Instantaneous SNR P_s|h|^2/N_0 of a link."""
        return cfg.P_s * abs(self.coefficient(link)) ** 2 / cfg.n0

    @staticmethod
    def gamma_bar(link, cfg):
        """Average SNR of a link under unit-mean fading power."""
        return cfg.P_s / cfg.n0


def harvested_power_ps(rho, h_sr, cfg):
    """Relay transmit power delta rho P_s L_sr |h_sr|^2 under power splitting."""
    check_ratio(rho, 'rho')
    return cfg.delta * rho * cfg.P_s * cfg.L_sr * np.abs(h_sr) ** 2


def harvested_power_ts(alpha, h_sr, cfg):
    """Relay transmit power 2 delta P_s L_sr |h_sr|^2 alpha/(1 - alpha) under time switching."""
    check_ratio(alpha, 'alpha')
    return 2.0 * cfg.delta * cfg.P_s * cfg.L_sr * np.abs(h_sr) ** 2 * alpha / (1.0 - alpha)


@dataclass
class Link:
    """One hop as seen by :func:`propagate`.

    *id_split* is the (1 - rho) factor of the power-splitting ID branch; it
    scales the signal power and the antenna noise, not the processing noise.
    """

    P_tx: object
    L: float
    h: object
    noise: tuple = field(default=(0.0, 0.0))
    T_s: float = 1.0
    id_split: Optional[float] = None


def propagate(u, link, rng):
    """Pass coded symbols over a link and add the receiver noise."""
    u = np.asarray(u)
    n1, n2 = link.noise
    if n1 < 0 or n2 < 0:
        raise ValueError("Noise variances must be non-negative")
    split = 1.0 if link.id_split is None else link.id_split
    amplitude = np.sqrt(np.asarray(link.P_tx) * link.T_s * link.L * split)
    shape = np.broadcast(u, amplitude, np.asarray(link.h)).shape
    y = amplitude * link.h * u
    if n1 > 0:
        y = y + np.sqrt(split) * complex_noise(rng, n1, shape)
    if n2 > 0:
        y = y + complex_noise(rng, n2, shape)
    return y
