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

"""Unit testing the analytical error-rate expressions."""

import unittest

import numpy as np
import pytest

from swipt_ddf.analysis import (AnalysisConstants, PairwiseStatistic, asymptotic_relay_ser, average_cond_ser,
                                avg_ser_closed_ps, avg_ser_closed_ts, avg_ser_numeric, clamp_epsilon,
                                cond_ser_ps, cond_ser_ts, diversity_slope, dominant_error_events, eta,
                                metric_stats, relay_avg_snr_id_ts, relay_epsilon, relay_epsilon_derivative_ps,
                                relay_epsilon_ps, relay_epsilon_ts, relay_ser_from_snr, relay_side_information,
                                rho_fn, ser_derivative_ps, tradeoff_curves)
from swipt_ddf.channel import ChannelRealization, NetworkConfig, ProtocolParams
from swipt_ddf.modem import mpsk_alphabet


class TestRelayErrorRate(unittest.TestCase):
    """Test the relay's average symbol error rate and the threshold."""

    def test_binary_relay_ser(self):
        """Test the exact binary DPSK value."""
        self.assertAlmostEqual(float(relay_ser_from_snr(1.0, 2)), 0.25)
        self.assertAlmostEqual(float(relay_ser_from_snr(0.0, 2)), 0.5)

    def test_higher_order_fit_exceeds_half_at_zero_snr(self):
        """Test the M > 2 fit is not bounded by one half at very low SNR."""
        self.assertGreater(float(relay_ser_from_snr(0.0, 8)), 0.5)
        self.assertLess(float(relay_ser_from_snr(1e4, 8)), 1e-3)

    def test_negative_snr_is_rejected(self):
        """Test the SNR domain check."""
        with self.assertRaises(ValueError):
            relay_ser_from_snr(-1.0, 2)

    def test_ps_relay_ser_decreases_with_snr_and_increases_with_rho(self):
        """Test the power splitting relay SER trends."""
        cfg = NetworkConfig(M=4)
        rhos = np.linspace(0.1, 0.9, 9)
        values = relay_epsilon_ps(rhos, cfg)
        self.assertTrue(np.all(np.diff(values) > 0))
        self.assertLess(float(relay_epsilon_ps(0.5, cfg.replace(snr_db=40))), float(relay_epsilon_ps(0.5, cfg)))

    def test_ts_relay_ser_depends_on_alpha(self):
        """Test the time switching relay SER through the information slot."""
        cfg = NetworkConfig()
        self.assertLess(float(relay_epsilon_ts(cfg, 0.2)), float(relay_epsilon_ts(cfg, 0.6)))
        gamma = relay_avg_snr_id_ts(cfg)
        self.assertAlmostEqual(gamma, cfg.T_s * cfg.P_s * cfg.L_sr / cfg.n0)
        self.assertAlmostEqual(float(relay_epsilon_ts(cfg)), 0.5 / (1 + gamma))
        self.assertAlmostEqual(float(relay_epsilon(ProtocolParams('TS', 0.2), cfg)),
                               float(relay_epsilon_ts(cfg, 0.2)))

    def test_eta_and_clamping(self):
        """Test the threshold and the clamp of epsilon."""
        self.assertAlmostEqual(float(eta(0.01, 2)), np.log(99.0))
        self.assertAlmostEqual(float(eta(0.75, 4)), 0.0)
        with self.assertRaises(ValueError):
            eta(0.0, 2)
        self.assertEqual(float(clamp_epsilon(0.7)), 0.5 - 1e-9)
        self.assertEqual(float(clamp_epsilon(0.0)), 1e-12)

    def test_side_information_warns_on_clamping(self):
        """Test a clamped epsilon is logged."""
        cfg = NetworkConfig(M=8, snr_db=0)
        with self.assertLogs('swipt_ddf.analysis', level='WARNING') as cm:
            epsilon, eta_value = relay_side_information(ProtocolParams('PS', 0.9), cfg)
        self.assertGreater(epsilon, 0.5)
        self.assertGreater(eta_value, 0)
        self.assertIn('clamped', cm.output[0])

    def test_asymptotic_relay_ser(self):
        """Test the high-SNR relay SER and its closed expression for the default noise split."""
        for M in (2, 4, 8):
            cfg = NetworkConfig(M=M, snr_db=60)
            self.assertAlmostEqual(asymptotic_relay_ser(0.7, cfg) / float(relay_epsilon_ps(0.7, cfg)), 1.0,
                                   places=3)
        cfg = NetworkConfig(M=2, snr_db=30)
        expected = 0.25 * (2 - 0.7) / ((1 - 0.7) * cfg.L_sr * cfg.snr)
        self.assertAlmostEqual(asymptotic_relay_ser(0.7, cfg), expected)


@pytest.mark.parametrize('M', [2, 4, 8])
def test_relay_ser_derivative_against_finite_differences(M):
    """Test d epsilon/d rho."""
    cfg = NetworkConfig(M=M, snr_db=25)
    for rho in (0.2, 0.5, 0.8):
        step = 1e-6
        numeric = (relay_epsilon_ps(rho + step, cfg) - relay_epsilon_ps(rho - step, cfg)) / (2 * step)
        assert relay_epsilon_derivative_ps(rho, cfg) == pytest.approx(numeric, rel=1e-5)


def test_ser_derivative_against_finite_differences():
    """Test the closed-form derivative of the closed-form average SER at random points."""
    rng = np.random.default_rng(2024)
    for _ in range(20):
        rho = rng.uniform(0.1, 0.85)
        cfg = NetworkConfig(M=int(rng.choice([2, 4, 8])), snr_db=rng.uniform(25, 40))
        step = 1e-5
        numeric = (avg_ser_closed_ps(rho + step, cfg).P_e - avg_ser_closed_ps(rho - step, cfg).P_e) / (2 * step)
        assert ser_derivative_ps(rho, cfg) == pytest.approx(numeric, rel=1e-4, abs=1e-10)


@pytest.mark.parametrize('M, snr_db', [(2, 30), (8, 40)])
def test_ser_derivative_changes_sign_once(M, snr_db):
    """Test the derivative goes from negative to positive exactly once."""
    cfg = NetworkConfig(M=M, snr_db=snr_db)
    values = np.array([ser_derivative_ps(rho, cfg) for rho in np.linspace(0.01, 0.99, 99)])
    assert values[0] < 0 < values[-1]
    assert np.count_nonzero(np.diff(np.sign(values)) != 0) == 1


def test_analysis_constants():
    """Test the constants of the closed form."""
    cfg = NetworkConfig(M=4, snr_db=30)
    consts = AnalysisConstants.from_config(cfg)
    assert consts.g_sd == pytest.approx(0.5 * cfg.L_sd)
    assert consts.g_rd == pytest.approx(0.5 * cfg.L_sr * cfg.L_rd)
    assert consts.a2 * consts.b2 * (consts.g_sd * consts.snr + 2) == pytest.approx(1.0)
    assert np.isnan(AnalysisConstants.from_config(cfg.replace(M=2)).a3)
    # c gamma_ID = b3 (1 - rho)/(2 - rho) with the default noise split
    c_m = 1 - np.cos(np.pi / 4)
    gamma_id = 2 * (1 - 0.6) * cfg.L_sr * cfg.snr / (2 - 0.6)
    assert c_m * gamma_id == pytest.approx(consts.b3 * rho_fn(0.6))
    assert AnalysisConstants.rho_fn(0.0) == 0.5
    assert AnalysisConstants.from_config(cfg, slot=0.5).g_sd == pytest.approx(0.25 * cfg.L_sd)


@pytest.mark.parametrize('M', [2, 4, 8])
def test_constants_form_of_relay_ser(M):
    """Test the b3 form of the relay SER and its derivative against the generic expressions."""
    cfg = NetworkConfig(M=M, snr_db=30)
    consts = AnalysisConstants.from_config(cfg)
    for rho in (0.1, 0.4, 0.75, 0.95):
        assert consts.relay_epsilon_ps(rho) == pytest.approx(relay_epsilon_ps(rho, cfg), rel=1e-9)
        assert consts.relay_epsilon_derivative_ps(rho) == pytest.approx(relay_epsilon_derivative_ps(rho, cfg),
                                                                        rel=1e-9)


def test_ser_derivative_with_uneven_noise_split():
    """Test the derivative falls back to the generic chain rule for an uneven S-R noise split."""
    cfg = NetworkConfig(M=4, snr_db=30, noise_split=(0.2, 0.8))
    step = 1e-5
    for rho in (0.3, 0.6, 0.85):
        numeric = (avg_ser_closed_ps(rho + step, cfg).P_e - avg_ser_closed_ps(rho - step, cfg).P_e) / (2 * step)
        assert ser_derivative_ps(rho, cfg) == pytest.approx(numeric, rel=1e-4, abs=1e-10)


def test_metric_stats():
    """Test mean and variance of a pairwise metric."""
    cfg = NetworkConfig(snr_db=30)
    symbols = mpsk_alphabet(4).symbols
    stats = metric_stats(symbols[0], symbols[1], symbols[0], 1.0, 1.0, cfg.L_sd, cfg)
    assert isinstance(stats, PairwiseStatistic)
    assert stats.u == pytest.approx(-cfg.L_sd * 1000.0)
    assert stats.W == pytest.approx(2 * cfg.L_sd * 1000.0)
    assert metric_stats(symbols[1], symbols[1], symbols[0], 1.0, 1.0, cfg.L_sd, cfg) == PairwiseStatistic(0.0, 0.0)


class TestConditionalSer(unittest.TestCase):
    """Test the conditional SER of the proposed detector."""

    def setUp(self):
        """Set up a default scenario."""
        self.cfg = NetworkConfig(M=4, snr_db=30)

    def test_total_is_weighted_sum(self):
        """Test the total of the correct and wrong relay parts."""
        res = cond_ser_ps(50.0, 80.0, 1.2, 0.7, self.cfg)
        self.assertAlmostEqual(float(res.total), float(res.p_c + res.p_e))
        binary = cond_ser_ps(50.0, 80.0, 1.2, 0.7, self.cfg.replace(M=2))
        self.assertAlmostEqual(float(binary.total), 0.5 * float(binary.p_c + binary.p_e))

    def test_vectorized_and_decreasing(self):
        """Test the conditional SER decreases with the S-D SNR."""
        gammas = np.array([10.0, 100.0, 1000.0, 10000.0])
        res = cond_ser_ts(gammas, 100.0, 1.0, 0.4, self.cfg)
        self.assertEqual(res.total.shape, (4,))
        self.assertTrue(np.all(np.diff(res.total) < 0))

    def test_perfect_relay(self):
        """Test a perfect relay removes the wrong-relay part."""
        res = cond_ser_ps(100.0, 100.0, 1.0, 0.5, self.cfg, epsilon=0.0)
        self.assertEqual(float(res.p_e), 0.0)
        self.assertGreater(float(res.p_c), 0.0)

    def test_zero_sd_snr_limit(self):
        """Test the limit of a vanishing S-D SNR."""
        res = cond_ser_ps(0.0, 100.0, 1.0, 0.5, self.cfg, epsilon=0.1, eta=2.0)
        self.assertAlmostEqual(float(res.p_e), 2 * 0.1 / 3 + 2 * 0.1 * 0.5)
        uninformative = cond_ser_ps(0.0, 100.0, 1.0, 0.5, self.cfg, epsilon=0.75)
        self.assertTrue(np.isfinite(uninformative.total))

    def test_negative_inputs(self):
        """Test the domain check on SNRs."""
        with self.assertRaises(ValueError) as cm:
            cond_ser_ps(-1.0, 10.0, 1.0, 0.5, self.cfg)
        self.assertEqual(str(cm.exception), "SNRs and channel gains must be non-negative")


def test_average_of_direct_link_only():
    """Test a perfect relay with no forwarding power leaves the direct-link DPSK average."""
    cfg = NetworkConfig(M=4, snr_db=40)
    consts = AnalysisConstants.from_config(cfg)
    value = average_cond_ser(0.0, np.inf, 0.0, consts)
    assert value == pytest.approx(1.0 / (consts.m_sd + 2.0), rel=0.01)


def test_quadrature_matches_sobol_average():
    """Test the two fading averages agree."""
    for protocol, ratio, M in (('PS', 0.8, 2), ('TS', 0.4, 4), ('PS', 0.5, 8)):
        cfg = NetworkConfig(M=M, snr_db=30)
        params = ProtocolParams(protocol, ratio)
        quad = avg_ser_numeric(params, cfg)
        sobol = avg_ser_numeric(params, cfg, method='mc', seed=3)
        assert sobol == pytest.approx(quad, rel=0.03)
    with pytest.raises(ValueError):
        avg_ser_numeric(ProtocolParams('PS', 0.8), NetworkConfig(), method='laguerre')


def test_closed_form_components():
    """Test the closed-form pieces add up."""
    cfg = NetworkConfig(M=4, snr_db=35)
    res = avg_ser_closed_ps(0.6, cfg)
    assert res.P_e == pytest.approx(res.P_C + res.P_E)
    assert res.Z3 == pytest.approx(np.exp(res.eta) * res.Z1)
    assert res.epsilon == pytest.approx(float(relay_epsilon_ps(0.6, cfg)))
    ts = avg_ser_closed_ts(0.4, cfg)
    assert 0 < ts.P_e < 1


@pytest.mark.parametrize('protocol', ['PS', 'TS'])
@pytest.mark.parametrize('M', [2, 4, 8])
def test_closed_form_tracks_numeric_average(protocol, M):
    """Test closed-form and numeric averages stay within a factor of three."""
    cfg = NetworkConfig(M=M, snr_db=35)
    closed = avg_ser_closed_ts if protocol == 'TS' else avg_ser_closed_ps
    for ratio in np.linspace(0.1, 0.9, 9):
        numeric = avg_ser_numeric(ProtocolParams(protocol, ratio), cfg)
        assert 1 / 3 <= closed(ratio, cfg).P_e / numeric <= 3


def test_closed_and_numeric_argmins_agree():
    """Test the minimizing PS ratios of both averages."""
    cfg = NetworkConfig(M=2, snr_db=35)
    grid = np.linspace(0.05, 0.95, 91)
    closed = [avg_ser_closed_ps(rho, cfg).P_e for rho in grid]
    numeric = [avg_ser_numeric(ProtocolParams('PS', rho), cfg) for rho in grid]
    assert abs(grid[np.argmin(closed)] - grid[np.argmin(numeric)]) <= 0.1


@pytest.mark.parametrize('M, first_snr', [(2, 40), (4, 40), (8, 50)])
def test_closed_form_high_snr_decay(M, first_snr):
    """Test the 10 dB decay ratios of the closed form approach two decades."""
    values = [avg_ser_closed_ps(0.8, NetworkConfig(M=M, snr_db=snr)).P_e for snr in range(first_snr, 81, 10)]
    ratios = np.array(values[:-1]) / np.array(values[1:])
    assert np.all((ratios >= 60) & (ratios <= 120))
    assert np.all(np.diff(ratios) > 0)


@pytest.mark.parametrize('protocol, ratio', [('PS', 0.8), ('TS', 0.4)])
def test_full_diversity_of_the_numeric_average(protocol, ratio):
    """Test the averaged SER decays with slope two."""
    points = [(snr, avg_ser_numeric(ProtocolParams(protocol, ratio), NetworkConfig(M=2, snr_db=snr)))
              for snr in (30, 35, 40, 45)]
    assert 1.7 <= diversity_slope(points) <= 2.2


def test_diversity_slope_fit():
    """Test the slope fit on an exact power law and its input checks."""
    points = [(snr, 10 ** (-2 * snr / 10)) for snr in (10, 20, 30)]
    assert diversity_slope(points) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        diversity_slope(points[:2])
    with pytest.raises(ValueError) as exec_info:
        diversity_slope([(10, 0.1), (20, 0.0), (30, 0.001)])
    assert str(exec_info.value) == "SER values must be positive for a slope fit"


@pytest.mark.parametrize('M', [2, 4, 8])
def test_dominant_events_with_correct_relay(M):
    """Test the nearest neighbours dominate when the relay decided correctly."""
    events = dominant_error_events(M, 'relay-correct')
    assert events.first_term == {(2,), (M,)}
    assert events.second_term == {(2, 1), (M, 1)}


@pytest.mark.parametrize('M', [4, 8])
def test_dominant_events_with_wrong_relay(M):
    """Test the dominating events when the relay forwarded a wrong symbol."""
    events = dominant_error_events(M, 'relay-wrong')
    assert events.second_term == {(2, 2), (M, M)}
    expected_first = {(r, v, r) for v in (2, M) for r in range(2, M + 1) if r != v}
    assert events.first_term == expected_first
    assert dominant_error_events(M, 'relay-wrong', x_r=2).second_term == {(2, 2)}


def test_dominant_events_binary_wrong_relay_and_errors():
    """Test the binary wrong-relay events and the argument checks."""
    events = dominant_error_events(2, 'relay-wrong')
    assert events.first_term == {(2, 2, 1)}
    assert events.second_term == {(2, 2)}
    with pytest.raises(ValueError):
        dominant_error_events(4, 'relay-wrong', x_r=1)
    with pytest.raises(ValueError):
        dominant_error_events(4, 'relay-lost')


@pytest.mark.parametrize('protocol', ['PS', 'TS'])
def test_tradeoff_curves_are_monotone(protocol):
    """Test the correct-relay term falls and the wrong-relay term rises with the ratio."""
    cfg = NetworkConfig(M=2, snr_db=35)
    table = tradeoff_curves(np.arange(0.05, 0.96, 0.05), cfg, ChannelRealization(1.0, 1.0, 1.0), protocol)
    assert list(table.columns) == ['ratio', 'epsilon', 'eta', 'P_C_dominant', 'P_E_dominant']
    assert np.all(np.diff(table['P_C_dominant']) < 0)
    assert np.all(np.diff(table['P_E_dominant']) > 0)
