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

"""Analytical error-rate machinery for the SWIPT differential decode-and-forward network.

The conditional error rate of the proposed destination detector is expressed
with Gaussian Q functions of the instantaneous SNRs. Averaging it over the
Rayleigh gains is done either numerically (:func:`avg_ser_numeric`) or with
the bounded closed form (:func:`avg_ser_closed_ps`, :func:`avg_ser_closed_ts`)
whose derivative in the PS ratio is available in closed form as well
(:func:`ser_derivative_ps`).

Notation follows the code base: ``g_sd = sin^2(pi/M) T_s L_sd``,
``g_rd = sin^2(pi/M) T_s L_sr L_rd``, epsilon is the relay's average symbol
error rate and eta = ln[(1 - epsilon)(M - 1)/epsilon] the relay-branch
threshold.
"""

import itertools
import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy import integrate
from scipy.stats import qmc

from swipt_ddf.channel import NetworkConfig, check_ratio, ts_slot_duration
from swipt_ddf.modem import mpsk_alphabet
from swipt_ddf.specialfn import q_function

LOG = logging.getLogger(__name__)

EPSILON_FLOOR = 1e-12
EPSILON_CEILING = 0.5 - 1e-9
RAYLEIGH_FIT = 1.03

REGIMES = ('relay-correct', 'relay-wrong')
AVERAGING_METHODS = ('quadrature', 'mc')


def _psk_fit(M):
    """Return (1 - cos(pi/M), a3) of the M > 2 relay error-rate fit."""
    cos_m = np.cos(np.pi / M)
    return 1.0 - cos_m, RAYLEIGH_FIT * np.sqrt((1.0 + cos_m) / (2.0 * cos_m))


def relay_ser_from_snr(gamma_id, M):
    """Average SER of non-coherent detection at the relay for an average ID SNR.

    M = 2 uses the exact DBPSK value 1/(2(1 + gamma)); larger alphabets use the
    1.03-coefficient fit, which exceeds 1/2 at very low SNR.
    """
    gamma_id = np.asarray(gamma_id, dtype=float)
    if np.any(gamma_id < 0):
        raise ValueError("The ID SNR must be non-negative")
    if M == 2:
        return 0.5 / (1.0 + gamma_id)
    c_m, a3 = _psk_fit(M)
    x = c_m * gamma_id
    return a3 * (1.0 - np.sqrt(x / (1.0 + x)))


def clamp_epsilon(epsilon):
    """Clamp the relay SER to the range where eta stays finite and positive."""
    return np.clip(epsilon, EPSILON_FLOOR, EPSILON_CEILING)


def relay_avg_snr_id_ps(rho, cfg):
    """Average SNR of the relay's ID branch under power splitting."""
    check_ratio(rho, 'rho')
    n1, n2 = cfg.noise_pair('sr')
    return (1.0 - rho) * cfg.T_s * cfg.P_s * cfg.L_sr / ((1.0 - rho) * n1 + n2)


def relay_epsilon_ps(rho, cfg):
    """Average SER at the relay under power splitting."""
    return relay_ser_from_snr(relay_avg_snr_id_ps(rho, cfg), cfg.M)


def relay_avg_snr_id_ts(cfg, alpha=None):
    """Average SNR at the relay under time switching.

    With *alpha* the information slot lasts (1 - alpha) T_s; without it
    ``cfg.T_s`` is taken as the information slot itself.
    """
    slot = cfg.T_s if alpha is None else ts_slot_duration(alpha, cfg)
    return slot * cfg.P_s * cfg.L_sr / cfg.sigma('sr')


def relay_epsilon_ts(cfg, alpha=None):
    """Average SER at the relay under time switching."""
    return relay_ser_from_snr(relay_avg_snr_id_ts(cfg, alpha), cfg.M)


def relay_epsilon(params, cfg):
    """Average relay SER for a protocol and ratio."""
    if params.protocol == 'TS':
        return relay_epsilon_ts(cfg, params.ratio)
    return relay_epsilon_ps(params.ratio, cfg)


def eta(epsilon, M):
    """Relay-branch threshold ln[(1 - epsilon)(M - 1)/epsilon]."""
    epsilon = np.asarray(epsilon, dtype=float)
    if np.any(epsilon <= 0) or np.any(epsilon >= 1):
        raise ValueError("epsilon must be strictly between 0 and 1")
    return np.log((1.0 - epsilon) * (M - 1) / epsilon)


def _eta_unchecked(epsilon, M):
    with np.errstate(divide='ignore'):
        return np.log((1.0 - epsilon) * (M - 1)) - np.log(epsilon)


def relay_side_information(params, cfg):
    """Return (epsilon, eta) as used by the destination.

    Epsilon is the raw average relay SER; eta is computed from its clamped
    value so that it stays finite and positive.
    """
    epsilon = float(relay_epsilon(params, cfg))
    clamped = float(clamp_epsilon(epsilon))
    if clamped != epsilon:
        LOG.warning("Relay SER %.3g clamped to %.3g for the detection threshold", epsilon, clamped)
    return epsilon, float(eta(clamped, cfg.M))


def relay_epsilon_derivative_ps(rho, cfg):
    """Derivative of the PS relay SER with respect to rho."""
    check_ratio(rho, 'rho')
    n1, n2 = cfg.noise_pair('sr')
    scale = cfg.T_s * cfg.P_s * cfg.L_sr
    denom = (1.0 - rho) * n1 + n2
    gamma_id = (1.0 - rho) * scale / denom
    dgamma = -scale * n2 / denom ** 2
    if cfg.M == 2:
        return -0.5 / (1.0 + gamma_id) ** 2 * dgamma
    c_m, a3 = _psk_fit(cfg.M)
    x = c_m * gamma_id
    return -a3 * c_m / (2.0 * (1.0 + x) ** 2 * np.sqrt(x / (1.0 + x))) * dgamma


def rho_fn(rho):
    """Map (1 - rho)/(2 - rho) of the PS ratio, decreasing from 1/2 to 0."""
    return (1.0 - rho) / (2.0 - rho)


@dataclass(frozen=True)
class AnalysisConstants:
    """Ratio-independent constants of the closed-form average.

    ``a3`` is only defined for M > 2 (NaN for M = 2).
    """

    M: int
    snr: float
    gamma_bar_sd: float
    gamma_bar_sr: float
    gamma_bar_rd: float
    delta: float
    g_sd: float
    g_rd: float
    a1: float
    b1: float
    a2: float
    b2: float
    a3: float
    b3: float

    @classmethod
    def from_config(cls, cfg, slot=None):
        """Compute the constants, optionally for another slot duration."""
        slot = cfg.T_s if slot is None else slot
        M = cfg.M
        sin2 = np.sin(np.pi / M) ** 2
        g_sd = sin2 * slot * cfg.L_sd
        g_rd = sin2 * slot * cfg.L_sr * cfg.L_rd
        snr = cfg.snr
        gb_sd = gb_sr = gb_rd = cfg.P_s / cfg.n0
        inner = g_sd / 2.0 + 1.0 / gb_sd
        a1 = np.sqrt(np.pi) * (2.0 * g_sd) ** -0.25 / (4.0 * gb_sd) * inner ** -0.75
        b1 = 0.25 + np.sqrt(inner) / (2.0 * np.sqrt(2.0 * g_sd))
        b2 = cfg.delta * g_rd * gb_sr * gb_rd / (2.0 * snr)
        a2 = 2.0 * snr / (cfg.delta * g_rd * (g_sd * gb_sd + 2.0) * gb_sr * gb_rd)
        a3 = _psk_fit(M)[1] if M > 2 else float('nan')
        b3 = 2.0 * (1.0 - np.cos(np.pi / M)) * slot * cfg.L_sr * gb_sr
        return cls(M=M, snr=snr, gamma_bar_sd=gb_sd, gamma_bar_sr=gb_sr, gamma_bar_rd=gb_rd,
                   delta=cfg.delta, g_sd=g_sd, g_rd=g_rd, a1=a1, b1=b1, a2=a2, b2=b2, a3=a3, b3=b3)

    @property
    def m_sd(self):
        """Average scaled S-D SNR g_sd gamma_bar_sd."""
        return self.g_sd * self.gamma_bar_sd

    @staticmethod
    def rho_fn(rho):
        """See :func:`rho_fn`."""
        return rho_fn(rho)

    def relay_epsilon_ps(self, rho):
        """PS relay SER through b3 rho_fn(rho), valid for an even S-R noise split."""
        x = self.b3 * rho_fn(rho)
        if self.M == 2:
            return 0.5 / (1.0 + x)
        return self.a3 * (1.0 - np.sqrt(x / (1.0 + x)))

    def relay_epsilon_derivative_ps(self, rho):
        """Derivative of :meth:`relay_epsilon_ps`; d rho_fn/d rho = -1/(2 - rho)^2."""
        x = self.b3 * rho_fn(rho)
        dx = -self.b3 / (2.0 - rho) ** 2
        if self.M == 2:
            return -0.5 / (1.0 + x) ** 2 * dx
        return -self.a3 / (2.0 * np.sqrt(x) * (1.0 + x) ** 1.5) * dx


@dataclass(frozen=True)
class PairwiseStatistic:
    """Mean and approximate variance of a pairwise detection metric."""

    u: float
    W: float


def metric_stats(z1, z2, x_tx, P_tx, h, L, cfg, slot=None):
    """Gaussian statistics of Re{y*[k] y[k-1] (z2 - z1)}/N_0 on one link.

    *x_tx* is the information symbol sent on the link, *P_tx* its transmit
    power, *h* the fading coefficient and *L* the path gain. Second-order noise
    terms are neglected in the variance.
    """
    slot = cfg.T_s if slot is None else slot
    scale = slot * L * P_tx * abs(h) ** 2 / cfg.n0
    diff = z2 - z1
    u = scale * np.real(np.conj(x_tx) * diff)
    W = scale * abs(diff) ** 2
    return PairwiseStatistic(u=float(u), W=float(W))


@dataclass
class CondSer:
    """Conditional SER given the channel gains.

    ``p_c`` covers a correct relay decision, ``p_e`` a wrong one.
    """

    p_c: object
    p_e: object
    total: object


def _cond_ser(gamma_sd, gamma_rd, h_sr_sq, gain, epsilon, eta_value, M, g_sd, g_rd):
    """Conditional SER for a relay gain factor (rho delta or 2 alpha delta/(1 - alpha))."""
    gamma_sd = np.asarray(gamma_sd, dtype=float)
    gamma_rd = np.asarray(gamma_rd, dtype=float)
    h_sr_sq = np.asarray(h_sr_sq, dtype=float)
    if np.any(gamma_sd < 0) or np.any(gamma_rd < 0) or np.any(h_sr_sq < 0):
        raise ValueError("SNRs and channel gains must be non-negative")
    x_sd = g_sd * gamma_sd
    root = np.sqrt(x_sd)
    cooperative = q_function(np.sqrt(x_sd + gain * g_rd * h_sr_sq * gamma_rd))
    # gamma_sd -> 0 limit of eta/(2 sqrt(.)): +-inf by the sign of eta, 0 for eta = 0
    with np.errstate(divide='ignore', invalid='ignore'):
        shift = np.where(root > 0, eta_value / (2.0 * np.where(root > 0, root, 1.0)),
                         np.sign(eta_value) * np.inf)
    shift = np.where(eta_value == 0, 0.0, shift)
    p_c = 2.0 * (1.0 - epsilon) * (cooperative + q_function(root + shift))
    p_e = 2.0 * epsilon / (M - 1) * q_function(root - shift) + 2.0 * epsilon * q_function(root)
    kappa = 0.5 if M == 2 else 1.0
    return CondSer(p_c=p_c, p_e=p_e, total=kappa * (p_c + p_e))


def _resolve_side_information(epsilon, eta_value, default_epsilon, M):
    if epsilon is None:
        epsilon = default_epsilon
        if eta_value is None:
            eta_value = eta(clamp_epsilon(epsilon), M)
    elif eta_value is None:
        eta_value = _eta_unchecked(epsilon, M)
    return epsilon, eta_value


def cond_ser_ps(gamma_sd, gamma_rd, h_sr_sq, rho, cfg, epsilon=None, eta=None):
    """Approximate conditional SER of the proposed detector under power splitting."""
    check_ratio(rho, 'rho')
    consts = AnalysisConstants.from_config(cfg)
    epsilon, eta_value = _resolve_side_information(epsilon, eta, relay_epsilon_ps(rho, cfg), cfg.M)
    return _cond_ser(gamma_sd, gamma_rd, h_sr_sq, rho * cfg.delta, epsilon, eta_value,
                     cfg.M, consts.g_sd, consts.g_rd)


def ts_gain(alpha):
    """Relay power factor 2 alpha/(1 - alpha) of time switching."""
    return 2.0 * alpha / (1.0 - alpha)


def cond_ser_ts(gamma_sd, gamma_rd, h_sr_sq, alpha, cfg, epsilon=None, eta=None):
    """Approximate conditional SER of the proposed detector under time switching."""
    consts = AnalysisConstants.from_config(cfg, slot=ts_slot_duration(alpha, cfg))
    epsilon, eta_value = _resolve_side_information(epsilon, eta, relay_epsilon_ts(cfg, alpha), cfg.M)
    return _cond_ser(gamma_sd, gamma_rd, h_sr_sq, ts_gain(alpha) * cfg.delta, epsilon, eta_value,
                     cfg.M, consts.g_sd, consts.g_rd)


def _cooperative_kernel(mu, m_sd):
    """E[Q(sqrt(m_sd X1 + mu X2))] for independent unit exponentials X1, X2."""
    c = 1.0 + 2.0 / m_sd
    sqrt_c = np.sqrt(c)
    t = mu / (mu + 2.0)
    numer = (2.0 / m_sd) * (1.0 / (sqrt_c + 1.0) + np.sqrt(t))
    return numer / (sqrt_c * (mu + 2.0) * (1.0 + np.sqrt(t)) * (1.0 + np.sqrt(c * t)))


def _cooperative_average(scale, m_sd):
    """Average of the cooperative Q term over the unit-exponential S-R gain."""
    if scale <= 0:
        return float(_cooperative_kernel(0.0, m_sd))
    s_low = min(1e-10, 1e-10 / scale)

    def integrand(tau):
        s = np.exp(tau)
        return _cooperative_kernel(scale * s, m_sd) * np.exp(-s) * s

    lower, upper = np.log(s_low), np.log(60.0)
    knee = float(np.clip(-np.log(scale), lower, upper))
    value, abserr = integrate.quad(integrand, lower, upper, points=[knee], limit=200,
                                   epsabs=0.0, epsrel=1e-10)
    LOG.debug("Cooperative term %.6e (abs. error %.1e)", value, abserr)
    return value + _cooperative_kernel(0.0, m_sd) * -np.expm1(-s_low)


def average_cond_ser(epsilon, eta_value, gain, consts, method='quadrature', n_samples=2 ** 20,
                     seed=0, sobol=True):
    """Average the conditional SER over independent unit-mean Rayleigh powers.

    ``quadrature`` integrates the single-link terms exactly and the
    cooperative term with one adaptive integral over |h_sr|^2. ``mc`` samples
    the three exponential gains with scrambled Sobol points (or plain
    pseudo-random draws when *sobol* is False).
    """
    if method not in AVERAGING_METHODS:
        raise ValueError("Unknown averaging method %s, use one of %s" % (method, ', '.join(AVERAGING_METHODS)))
    M = consts.M
    if method == 'mc':
        if sobol:
            sampler = qmc.Sobol(d=3, scramble=True, seed=seed)
            uniforms = sampler.random_base2(m=int(np.ceil(np.log2(n_samples))))
            draws = -np.log1p(-uniforms)
        else:
            draws = np.random.default_rng(seed).exponential(size=(int(n_samples), 3))
        cond = _cond_ser(consts.gamma_bar_sd * draws[:, 0], consts.gamma_bar_rd * draws[:, 1], draws[:, 2],
                         gain, epsilon, eta_value, M, consts.g_sd, consts.g_rd)
        return float(np.mean(cond.total))

    m_sd = consts.m_sd
    q = np.sqrt(1.0 + 2.0 / m_sd)
    one_minus = (2.0 / m_sd) / (q * (q + 1.0))
    direct = 0.5 * one_minus
    with np.errstate(invalid='ignore'):
        above = 0.5 * one_minus * np.exp(-0.5 * eta_value * (1.0 + q))
        below = 1.0 - 0.5 * (1.0 + 1.0 / q) * np.exp(0.5 * eta_value * (1.0 - q))
    cooperative = _cooperative_average(gain * consts.g_rd * consts.gamma_bar_rd, m_sd)
    kappa = 0.5 if M == 2 else 1.0
    total = kappa * (2.0 * (1.0 - epsilon) * (cooperative + above)
                     + 2.0 * epsilon / (M - 1) * below + 2.0 * epsilon * direct)
    return float(total)


def avg_ser_numeric(params, cfg, method='quadrature', n_samples=2 ** 20, seed=0, sobol=True):
    """Average the conditional SER of the given protocol over the fading."""
    if params.protocol == 'TS':
        consts = AnalysisConstants.from_config(cfg, slot=ts_slot_duration(params.ratio, cfg))
        gain = ts_gain(params.ratio) * cfg.delta
    else:
        consts = AnalysisConstants.from_config(cfg)
        gain = params.ratio * cfg.delta
    epsilon = float(relay_epsilon(params, cfg))
    eta_value = float(eta(clamp_epsilon(epsilon), cfg.M))
    return average_cond_ser(epsilon, eta_value, gain, consts, method=method, n_samples=n_samples,
                            seed=seed, sobol=sobol)


@dataclass(frozen=True)
class ClosedFormSer:
    """Closed-form average SER and its components."""

    P_C: float
    P_E: float
    P_e: float
    Z1: float
    Z2: float
    Z3: float
    epsilon: float
    eta: float


def z2_term(a2, b2, x):
    """Z2 = (a2/x) ln(1 + b2 x) for a relay gain factor x."""
    return a2 / x * np.log1p(b2 * x)


def _closed_form(consts, epsilon, x):
    eta_value = eta(clamp_epsilon(epsilon), consts.M)
    root = np.sqrt(2.0 * eta_value)
    Z1 = consts.a1 * root * np.exp(-2.0 * consts.b1 * eta_value)
    Z3 = consts.a1 * root * np.exp((1.0 - 2.0 * consts.b1) * eta_value)
    Z2 = z2_term(consts.a2, consts.b2, x)
    P_C = (1.0 - epsilon) * (Z1 + Z2)
    P_E = epsilon * Z3 / (consts.M - 1) + epsilon / (consts.m_sd + 2.0)
    return ClosedFormSer(P_C=float(P_C), P_E=float(P_E), P_e=float(P_C + P_E), Z1=float(Z1),
                         Z2=float(Z2), Z3=float(Z3), epsilon=float(epsilon), eta=float(eta_value))


def avg_ser_closed_ps(rho, cfg):
    """Closed-form average SER under power splitting."""
    check_ratio(rho, 'rho')
    return _closed_form(AnalysisConstants.from_config(cfg), relay_epsilon_ps(rho, cfg), rho)


def avg_ser_closed_ts(alpha, cfg):
    """Closed-form average SER under time switching."""
    consts = AnalysisConstants.from_config(cfg, slot=ts_slot_duration(alpha, cfg))
    return _closed_form(consts, relay_epsilon_ts(cfg, alpha), ts_gain(alpha))


def ser_derivative_ps(rho, cfg):
    """Closed-form derivative of :func:`avg_ser_closed_ps` with respect to rho."""
    check_ratio(rho, 'rho')
    consts = AnalysisConstants.from_config(cfg)
    M = cfg.M
    epsilon = float(relay_epsilon_ps(rho, cfg))
    n1, n2 = cfg.noise_pair('sr')
    if np.isclose(n1, n2) and np.isclose(n1 + n2, cfg.n0):
        d_epsilon = float(consts.relay_epsilon_derivative_ps(rho))
    else:
        d_epsilon = float(relay_epsilon_derivative_ps(rho, cfg))
    clamped = float(clamp_epsilon(epsilon))
    eta_value = float(eta(clamped, M))
    d_eta = -1.0 / (epsilon * (1.0 - epsilon)) * d_epsilon if clamped == epsilon else 0.0

    root = np.sqrt(2.0 * eta_value)
    decay = np.exp(-2.0 * consts.b1 * eta_value)
    Z1 = consts.a1 * root * decay
    dZ1 = consts.a1 * decay * (1.0 / root - 2.0 * consts.b1 * root)
    growth = np.exp(eta_value)
    Z3 = growth * Z1
    dZ3 = Z3 + growth * dZ1
    log_term = np.log1p(consts.b2 * rho)
    Z2 = consts.a2 / rho * log_term
    dZ2 = -consts.a2 * log_term / rho ** 2 + consts.a2 * consts.b2 / (rho * (1.0 + consts.b2 * rho))

    d_pc = -d_epsilon * (Z1 + Z2) + (1.0 - epsilon) * (dZ1 * d_eta + dZ2)
    d_pe = (d_epsilon * Z3 + epsilon * dZ3 * d_eta) / (M - 1) + d_epsilon / (consts.m_sd + 2.0)
    return float(d_pc + d_pe)


def asymptotic_relay_ser(rho, cfg):
    """Leading-order relay SER at high SNR under power splitting."""
    check_ratio(rho, 'rho')
    if cfg.M == 2:
        factor = 0.5
    else:
        c_m, a3 = _psk_fit(cfg.M)
        factor = a3 / (2.0 * c_m)
    return factor / relay_avg_snr_id_ps(rho, cfg)


def diversity_slope(points):
    """Least-squares slope of -log10(SER) against SNR in units of 10 dB."""
    points = list(points)
    if len(points) < 3:
        raise ValueError("At least three (snr_db, ser) points are needed for a slope fit")
    snr_db, ser = np.asarray(points, dtype=float).T
    if np.any(ser <= 0):
        raise ValueError("SER values must be positive for a slope fit")
    slope, _ = np.polyfit(snr_db / 10.0, -np.log10(ser), 1)
    return float(slope)


@dataclass(frozen=True)
class DominantErrorEvents:
    """Maximizing symbol combinations of the two pairwise error terms of a regime.

    Relay-correct: ``first_term`` holds (x_v,), ``second_term`` (x_v, x_u).
    Relay-wrong: ``first_term`` holds (x_r, x_v, x_u), ``second_term`` (x_r, x_v).
    All indices are 1-based.
    """

    regime: str
    first_term: frozenset
    second_term: frozenset


def _pairwise_probability(threshold, stats):
    u = sum(s.u for s in stats)
    W = sum(s.W for s in stats)
    if W == 0:
        return 1.0 if u > threshold else 0.0
    return float(q_function((threshold - u) / np.sqrt(W)))


def _maximizers(candidates):
    best = max(candidates.values())
    return frozenset(key for key, value in candidates.items() if np.isclose(value, best, rtol=1e-9, atol=0.0))


def dominant_error_events(M, regime='relay-correct', cfg=None, x_r=None, rho=0.8):
    """Enumerate the dominating pairwise error events by brute force.

    The source sends x_1. The statistics are evaluated for unit fading gains
    at the scenario SNR (30 dB by default), with the relay power harvested at
    PS ratio *rho*. In the relay-wrong regime every x_r != x_1 is enumerated
    unless *x_r* is given.
    """
    if regime not in REGIMES:
        raise ValueError("Unknown regime %s, use one of %s" % (regime, ', '.join(REGIMES)))
    cfg = NetworkConfig(M=M) if cfg is None else cfg
    if cfg.M != M:
        cfg = cfg.replace(M=M)
    symbols = mpsk_alphabet(M).symbols
    p_r = cfg.delta * rho * cfg.P_s * cfg.L_sr
    _, eta_value = relay_side_information_ps(rho, cfg)

    def sd(z1, z2):
        return metric_stats(symbols[z1], symbols[z2], symbols[0], cfg.P_s, 1.0, cfg.L_sd, cfg)

    def rd(x_relay, z1, z2):
        return metric_stats(symbols[z1], symbols[z2], symbols[x_relay], p_r, 1.0, cfg.L_rd, cfg)

    indices = range(M)
    first, second = {}, {}
    if regime == 'relay-correct':
        for v in indices[1:]:
            first[(v + 1,)] = _pairwise_probability(0.0, [sd(0, v), rd(0, 0, v)])
        for v, u in itertools.product(indices[1:], indices):
            if u != v:
                second[(v + 1, u + 1)] = _pairwise_probability(eta_value, [sd(0, v), rd(0, 0, u)])
    else:
        relays = [x_r - 1] if x_r is not None else list(indices[1:])
        if any(r <= 0 or r >= M for r in relays):
            raise ValueError("The wrong relay symbol must be one of x_2..x_%d" % M)
        for r in relays:
            for v, u in itertools.product(indices[1:], indices):
                if u != v:
                    first[(r + 1, v + 1, u + 1)] = _pairwise_probability(0.0, [sd(0, v), rd(r, r, u)])
            for v in indices[1:]:
                second[(r + 1, v + 1)] = _pairwise_probability(-eta_value, [sd(0, v), rd(r, r, v)])
    return DominantErrorEvents(regime=regime, first_term=_maximizers(first), second_term=_maximizers(second))


def relay_side_information_ps(rho, cfg):
    """(epsilon, eta) at the destination for a PS ratio."""
    epsilon = float(relay_epsilon_ps(rho, cfg))
    return epsilon, float(eta(clamp_epsilon(epsilon), cfg.M))


def tradeoff_curves(ratios, cfg, channel, protocol='PS'):
    """Dominating conditional error terms across a grid of PS or TS ratios.

    Returns a DataFrame with the ratio, epsilon, eta and the two dominating
    terms: the correct-relay term decreases and the wrong-relay term increases
    with the ratio when the S-R link is good.
    """
    protocol = protocol.upper()
    rows = []
    for ratio in np.asarray(ratios, dtype=float):
        if protocol == 'TS':
            consts = AnalysisConstants.from_config(cfg, slot=ts_slot_duration(ratio, cfg))
            epsilon = float(relay_epsilon_ts(cfg, ratio))
            gain = ts_gain(ratio) * cfg.delta
        else:
            check_ratio(ratio, 'rho')
            consts = AnalysisConstants.from_config(cfg)
            epsilon = float(relay_epsilon_ps(ratio, cfg))
            gain = ratio * cfg.delta
        eta_value = float(eta(clamp_epsilon(epsilon), cfg.M))
        x_sd = consts.g_sd * channel.gamma('sd', cfg)
        coop = x_sd + gain * consts.g_rd * abs(channel.h_sr) ** 2 * channel.gamma('rd', cfg)
        p_c = 2.0 * (1.0 - epsilon) * q_function(np.sqrt(coop))
        p_e = 2.0 * epsilon / (cfg.M - 1) * q_function(np.sqrt(x_sd) - eta_value / (2.0 * np.sqrt(x_sd)))
        rows.append({'ratio': ratio, 'epsilon': epsilon, 'eta': eta_value,
                     'P_C_dominant': float(p_c), 'P_E_dominant': float(p_e)})
    return pd.DataFrame(rows, columns=['ratio', 'epsilon', 'eta', 'P_C_dominant', 'P_E_dominant'])
