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

"""Monte-Carlo estimation of the end-to-end symbol error rate.

Frames of differentially encoded symbols are sent over the S-R and S-D links
in the first slot; the relay detects, re-encodes with its own reference
symbol and forwards with the power it harvested from that frame's S-R
fading. The destination runs every requested detector on the same received
frames.

Frames are grouped in chunks. Each chunk draws from its own random stream,
``SeedSequence(seed, spawn_key=(chunk,))``, and the early stop is decided in
chunk order, so the result does not depend on the number of worker threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
import pandas as pd
from scipy.stats import norm

from swipt_ddf.analysis import relay_side_information
from swipt_ddf.channel import (Link, NetworkConfig, ProtocolParams, harvested_power_ps, harvested_power_ts,
                               propagate, sample_rayleigh, ts_slot_duration)
from swipt_ddf.detectors import SIMULATED_DETECTORS, decide
from swipt_ddf.modem import encode_phase_indices, mpsk_alphabet, relay_detect_batch
from swipt_ddf.utils import fingerprint

LOG = logging.getLogger(__name__)

FRAME_LENGTH = 100
CHUNK_FRAMES = 100
MIN_ERRORS = 200
SWEEP_AXES = ('snr_db', 'ratio', 'delta', 'd_rd')
RESULT_COLUMNS = ['snr_db', 'protocol', 'ratio', 'detector', 'M', 'ser', 'ci_low', 'ci_high', 'trials',
                  'errors', 'seed']


def wilson_interval(errors, trials, confidence=0.95):
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("The number of trials must be positive")
    z = norm.ppf(0.5 + confidence / 2.0)
    p = errors / trials
    denom = 1.0 + z * z / trials
    centre = (p + z * z / (2.0 * trials)) / denom
    half = z * np.sqrt(p * (1.0 - p) / trials + z * z / (4.0 * trials * trials)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


@dataclass(frozen=True)
class SerEstimate:
    """Symbol error rate estimate with its 95% Wilson interval."""

    detector: str
    trials: int
    errors: int
    ser: float
    ci_low: float
    ci_high: float
    seed: int
    fingerprint: str

    @classmethod
    def from_counts(cls, detector, errors, trials, seed, config_fingerprint):
        """Build the estimate from raw counts."""
        ci_low, ci_high = wilson_interval(errors, trials)
        ser = errors / trials
        return cls(detector=detector, trials=int(trials), errors=int(errors), ser=ser,
                   ci_low=min(ci_low, ser), ci_high=max(ci_high, ser), seed=int(seed),
                   fingerprint=config_fingerprint)

    @property
    def half_width(self):
        """Half the width of the confidence interval."""
        return (self.ci_high - self.ci_low) / 2.0


@dataclass
class _Scenario:
    cfg: NetworkConfig
    params: ProtocolParams
    targets: tuple
    frame_length: int
    seed: int
    relay_bypass: bool = False
    channel: object = None
    alphabet: object = field(init=False)
    epsilon: float = field(init=False)
    eta: float = field(init=False)

    def __post_init__(self):
        self.alphabet = mpsk_alphabet(self.cfg.M)
        if self.relay_bypass:
            self.epsilon, self.eta = (self.cfg.M - 1) / self.cfg.M, 0.0
        else:
            self.epsilon, self.eta = relay_side_information(self.params, self.cfg)

    def fading(self, rng, n_frames):
        """Coefficients (h_sr, h_sd, h_rd), one per frame, as column vectors."""
        if self.channel is not None:
            return [np.full((n_frames, 1), self.channel.coefficient(link)) for link in ('sr', 'sd', 'rd')]
        draws = sample_rayleigh(rng, (n_frames, 3))
        return [draws[:, i:i + 1] for i in range(3)]

    def run_chunk(self, chunk, n_frames):
        """Simulate *n_frames* frames and count the symbol errors per target."""
        cfg, M = self.cfg, self.cfg.M
        rng = np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(chunk,)))
        info = rng.integers(0, M, size=(n_frames, self.frame_length))
        coded = self.alphabet.symbols[encode_phase_indices(info, M)]
        h_sr, h_sd, h_rd = self.fading(rng, n_frames)

        ratio = self.params.ratio
        if self.params.protocol == 'TS':
            slot, id_split = ts_slot_duration(ratio, cfg), None
            p_relay = harvested_power_ts(ratio, h_sr, cfg)
        else:
            slot, id_split = cfg.T_s, 1.0 - ratio
            p_relay = harvested_power_ps(ratio, h_sr, cfg)
        if self.relay_bypass:
            p_relay = np.zeros_like(p_relay)

        y_sr = propagate(coded, Link(cfg.P_s, cfg.L_sr, h_sr, cfg.noise_pair('sr'), slot, id_split), rng)
        y_sd = propagate(coded, Link(cfg.P_s, cfg.L_sd, h_sd, cfg.noise_pair('sd'), slot), rng)
        relayed = relay_detect_batch(y_sr[:, :-1], y_sr[:, 1:], self.alphabet)
        counts = {'relay': int(np.count_nonzero(relayed != info))}

        detectors = [kind for kind in self.targets if kind != 'relay']
        if detectors:
            recoded = self.alphabet.symbols[encode_phase_indices(relayed, M)]
            y_rd = propagate(recoded, Link(p_relay, cfg.L_rd, h_rd, cfg.noise_pair('rd'), slot), rng)
            c_sd = np.conj(y_sd[:, 1:]) * y_sd[:, :-1]
            c_rd = np.conj(y_rd[:, 1:]) * y_rd[:, :-1]
            for kind in detectors:
                decisions = decide(kind, c_sd, c_rd, cfg.sigma('sd'), cfg.sigma('rd'), self.epsilon, self.eta,
                                   self.alphabet.symbols)
                counts[kind] = int(np.count_nonzero(decisions != info))
        LOG.debug("Chunk %d: %s", chunk, counts)
        return counts

    def fingerprint(self):
        """Hash of everything that determines the outcome besides the seed."""
        channel = None
        if self.channel is not None:
            channel = [[float(np.real(h)), float(np.imag(h))]
                       for h in (self.channel.h_sr, self.channel.h_sd, self.channel.h_rd)]
        return fingerprint({'network': self.cfg.as_dict(), 'protocol': asdict(self.params),
                            'frame_length': self.frame_length, 'relay_bypass': self.relay_bypass,
                            'channel': channel})


def _run(scenario, trials, chunk_frames, min_errors, threads):
    if trials < 1:
        raise ValueError("The number of trials must be at least 1")
    if chunk_frames < 1 or threads < 1:
        raise ValueError("chunk_frames and threads must be positive")
    n_frames = int(np.ceil(trials / scenario.frame_length))
    n_chunks = int(np.ceil(n_frames / chunk_frames))
    sizes = [min(chunk_frames, n_frames - chunk * chunk_frames) for chunk in range(n_chunks)]
    totals = dict.fromkeys(scenario.targets, 0)
    frames_done = 0

    def reached():
        return min_errors is not None and min(totals.values()) >= min_errors

    with ThreadPoolExecutor(max_workers=threads) as executor:
        chunk = 0
        while chunk < n_chunks and not reached():
            batch = range(chunk, min(chunk + threads, n_chunks))
            results = list(executor.map(lambda c: scenario.run_chunk(c, sizes[c]), batch))
            for index, counts in zip(batch, results):
                for target in scenario.targets:
                    totals[target] += counts[target]
                frames_done += sizes[index]
                chunk = index + 1
                if reached():
                    break
    symbols = frames_done * scenario.frame_length
    if chunk < n_chunks:
        LOG.debug("Error floor of %d reached after %d symbols", min_errors, symbols)
    config_fingerprint = scenario.fingerprint()
    return {target: SerEstimate.from_counts(target, totals[target], symbols, scenario.seed, config_fingerprint)
            for target in scenario.targets}


def simulate_detectors(cfg, params, detectors=SIMULATED_DETECTORS, trials=100000, seed=0,
                       frame_length=FRAME_LENGTH, chunk_frames=CHUNK_FRAMES, min_errors=MIN_ERRORS, threads=1,
                       relay_bypass=False, channel=None):
    """Estimate the SER of several detectors on the same simulated frames.

    *trials* caps the number of detected information symbols; it is rounded up
    to whole frames. The run stops early once every detector has made
    *min_errors* errors (``None`` disables the early stop). A fixed *channel*
    gives the SER conditioned on that realization.
    """
    detectors = tuple(detectors)
    unknown = set(detectors) - set(SIMULATED_DETECTORS)
    if not detectors or unknown:
        raise ValueError("Detectors must be chosen from %s" % ', '.join(SIMULATED_DETECTORS))
    scenario = _Scenario(cfg, params, detectors, int(frame_length), int(seed), relay_bypass, channel)
    return _run(scenario, trials, int(chunk_frames), min_errors, int(threads))


def simulate_ser(cfg, params, detector='proposed', trials=100000, seed=0, **options):
    """Estimate the SER of one detector."""
    return simulate_detectors(cfg, params, (detector,), trials, seed, **options)[detector]


def simulate_relay_ser(cfg, params, trials=100000, seed=0, frame_length=FRAME_LENGTH,
                       chunk_frames=CHUNK_FRAMES, min_errors=MIN_ERRORS, threads=1):
    """Estimate the relay's own symbol error rate."""
    scenario = _Scenario(cfg, params, ('relay',), int(frame_length), int(seed))
    return _run(scenario, trials, int(chunk_frames), min_errors, int(threads))['relay']


@dataclass(frozen=True)
class SweepSpec:
    """A one-dimensional sweep of Monte-Carlo runs."""

    axis: str
    values: tuple
    network: NetworkConfig = field(default_factory=NetworkConfig)
    protocol: ProtocolParams = field(default_factory=ProtocolParams)
    detectors: tuple = SIMULATED_DETECTORS
    trials: int = 100000
    min_errors: object = MIN_ERRORS
    seed: int = 0
    frame_length: int = FRAME_LENGTH
    chunk_frames: int = CHUNK_FRAMES
    threads: int = 1
    common_seed: bool = False

    def __post_init__(self):
        """Check the axis and the values."""
        if self.axis not in SWEEP_AXES:
            raise ValueError("Unknown sweep axis %s, use one of %s" % (self.axis, ', '.join(SWEEP_AXES)))
        values = tuple(float(v) for v in self.values)
        if not values:
            raise ValueError("A sweep needs at least one value")
        if list(values) != sorted(values):
            raise ValueError("Sweep values must be sorted")
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'detectors', tuple(self.detectors))

    def point(self, value):
        """Scenario (network, protocol) at one axis value."""
        network, protocol = self.network, self.protocol
        if self.axis == 'snr_db':
            network = network.replace(snr_db=value)
        elif self.axis == 'delta':
            network = network.replace(delta=value)
        elif self.axis == 'd_rd':
            network = network.replace(d_rd=value, d_sr=network.d_sd - value)
        else:
            protocol = ProtocolParams(protocol.protocol, value)
        return network, protocol

    def point_seed(self, index):
        """Root seed of the index-th point; all points share it with common random numbers."""
        if self.common_seed:
            return self.seed
        return int(np.random.SeedSequence(self.seed, spawn_key=(index,)).generate_state(1)[0])


def estimate_rows(estimates, network, protocol):
    """Rows of the result table for a dict of SerEstimate."""
    return [{'snr_db': network.snr_db, 'protocol': protocol.protocol, 'ratio': protocol.ratio,
             'detector': est.detector, 'M': network.M, 'ser': est.ser, 'ci_low': est.ci_low,
             'ci_high': est.ci_high, 'trials': est.trials, 'errors': est.errors, 'seed': est.seed}
            for est in estimates.values()]


def run_sweep(spec):
    """Run every point of the sweep; one row per (axis value, detector)."""
    rows = []
    for index, value in enumerate(spec.values):
        network, protocol = spec.point(value)
        estimates = simulate_detectors(network, protocol, spec.detectors, spec.trials, spec.point_seed(index),
                                       frame_length=spec.frame_length, chunk_frames=spec.chunk_frames,
                                       min_errors=spec.min_errors, threads=spec.threads)
        for row in estimate_rows(estimates, network, protocol):
            if spec.axis not in row:
                row[spec.axis] = value
            rows.append(row)
        LOG.info("%s = %g: %s", spec.axis, value,
                 ', '.join("%s %.3e" % (est.detector, est.ser) for est in estimates.values()))
    columns = RESULT_COLUMNS + ([] if spec.axis in RESULT_COLUMNS else [spec.axis])
    return pd.DataFrame(rows, columns=columns)
