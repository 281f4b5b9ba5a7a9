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

"""Command line front end: simulate, analyze, optimize, sweep, complexity and replay.

Every command resolves the scenario (defaults, ``--config`` file, ``--set``
overrides, dedicated flags, in that order) before it runs. File outputs are
written next to a ``<output>.manifest.json`` that ``replay`` uses to recreate
them.
"""

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

import numpy as np
import pandas as pd

from swipt_ddf import __version__
from swipt_ddf.analysis import (avg_ser_closed_ps, avg_ser_closed_ts, avg_ser_numeric, ser_derivative_ps,
                                tradeoff_curves)
from swipt_ddf.channel import ChannelRealization, ProtocolParams
from swipt_ddf.config import (ConfigError, apply_overrides, build_scenario, merge_config, read_config,
                              resolve_seed, validate_value)
from swipt_ddf.detectors import DETECTOR_KINDS, SIMULATED_DETECTORS, count_operations
from swipt_ddf.logger import setup_logging
from swipt_ddf.mc_engine import (RESULT_COLUMNS, SWEEP_AXES, SweepSpec, estimate_rows, run_sweep,
                                 simulate_detectors)
from swipt_ddf.optimizer import (NoInteriorOptimumError, UnsupportedMethodError, optimal_ratio_minimize,
                                 optimal_ratio_root, optimal_ratio_simulated)
from swipt_ddf.utils import dumps_json

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3

CURVES = ('closed-ps', 'closed-ts', 'prop1-numeric', 'prop2-numeric', 'tradeoff')
OPTIMIZE_METHODS = ('root', 'closed-min', 'numeric-min', 'sim-grid')

# flag destination -> configuration key
FLAG_KEYS = {
    'snr': 'network.snr_db',
    'M': 'network.M',
    'delta': 'network.delta',
    'd_rd': 'network.d_rd',
    'protocol': 'protocol.protocol',
    'rho': 'protocol.rho',
    'alpha': 'protocol.alpha',
    'trials': 'sim.trials',
    'min_errors': 'sim.min_errors',
    'threads': 'sim.threads',
    'detector': 'sim.detectors',
}


def parse_grid(text):
    """Parse 'start:stop:step' (stop included) or a comma separated list of values."""
    try:
        if ':' in text:
            start, stop, step = (float(part) for part in text.split(':'))
            if step <= 0 or stop < start:
                raise ValueError
            count = int(round((stop - start) / step)) + 1
            return np.round(start + step * np.arange(count), 12)
        return np.array([float(part) for part in text.split(',')])
    except ValueError:
        raise argparse.ArgumentTypeError("'%s' is not a start:stop:step grid or a list of values" % text)


def parse_sizes(text):
    """Parse a comma separated list of modulation sizes."""
    try:
        sizes = [int(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError("'%s' is not a comma separated list of integers" % text)
    return sizes


def parse_count(text):
    """Parse a count, accepting exponent notation such as 1e6."""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("'%s' is not a number" % text)
    if value != int(value) or value < 1:
        raise argparse.ArgumentTypeError("'%s' is not a positive integer" % text)
    return int(value)


def build_parser():
    """Create the argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-l", "--log-config",
                        help="Log config file to use instead of the standard logging.")
    common.add_argument("-c", "--config",
                        help="YAML scenario file to use.")
    common.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0,
                        help="Verbosity (between 1 and 2 occurrences with more leading to more "
                        "verbose logging). WARN=0, INFO=1, "
                        "DEBUG=2. This is overridden by the log config file if specified.")
    common.add_argument("--set", dest="overrides", action="append", default=[], metavar="SECTION.KEY=VALUE",
                        help="Override a configuration value, may be repeated.")
    common.add_argument("--seed", type=int, help="Root seed of the random streams.")
    common.add_argument("-o", "--out", help="Output file, standard output if not given.")
    common.add_argument("--format", choices=('csv', 'json'),
                        help="Output format, from the output file suffix by default.")

    scenario = argparse.ArgumentParser(add_help=False)
    scenario.add_argument("--snr", type=float, help="Transmit SNR P_s/N_0 in dB.")
    scenario.add_argument("--M", type=int, help="PSK modulation size.")
    scenario.add_argument("--delta", type=float, help="Energy conversion efficiency.")
    scenario.add_argument("--d-rd", dest="d_rd", type=float, help="R-D distance.")
    scenario.add_argument("--protocol", help="Energy harvesting protocol, PS or TS.")
    scenario.add_argument("--rho", type=float, help="Power splitting ratio.")
    scenario.add_argument("--alpha", type=float, help="Time switching ratio.")

    mc_opts = argparse.ArgumentParser(add_help=False)
    mc_opts.add_argument("--trials", type=parse_count, help="Cap on the number of detected symbols.")
    mc_opts.add_argument("--min-errors", dest="min_errors", type=int, help="Error count that stops a run.")
    mc_opts.add_argument("--threads", type=int, help="Number of worker threads.")
    mc_opts.add_argument("--detector", choices=SIMULATED_DETECTORS + ('all',), help="Detector(s) to simulate.")

    parser = argparse.ArgumentParser(description="SWIPT differential decode-and-forward relay toolkit.")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("simulate", parents=[common, scenario, mc_opts], help="Monte-Carlo SER of the detectors.")

    analyze = commands.add_parser("analyze", parents=[common, scenario], help="Analytical SER curves.")
    analyze.add_argument("--curve", choices=CURVES, default='closed-ps')
    analyze.add_argument("--rho-grid", "--alpha-grid", "--grid", dest="grid", type=parse_grid,
                         default=parse_grid("0.05:0.95:0.05"), help="Ratio grid, start:stop:step or a list.")
    analyze.add_argument("--average", choices=('quadrature', 'mc'), default='quadrature',
                         help="Fading average of the numeric curves.")

    optimize = commands.add_parser("optimize", parents=[common, scenario, mc_opts], help="Optimal PS/TS ratio.")
    optimize.add_argument("--method", choices=OPTIMIZE_METHODS, default='root')
    optimize.add_argument("--grid", type=parse_grid, help="Ratio grid of the simulated search.")

    sweep = commands.add_parser("sweep", parents=[common, scenario, mc_opts], help="Monte-Carlo sweep.")
    sweep.add_argument("--axis", choices=SWEEP_AXES, required=True)
    sweep.add_argument("--values", type=parse_grid, required=True, help="start:stop:step or a list.")
    sweep.add_argument("--common-seed", action="store_true",
                       help="Use the root seed at every point (common random numbers).")

    complexity = commands.add_parser("complexity", parents=[common], help="Operation counts per detection.")
    complexity.add_argument("--M", dest="sizes", type=parse_sizes, default=[2, 4, 8])
    complexity.add_argument("--S", dest="subintervals", type=int, default=100,
                            help="Riemann subintervals of the exact MLD.")

    replay = commands.add_parser("replay", parents=[common], help="Re-run a stored run manifest.")
    replay.add_argument("manifest", help="Run manifest written next to an output file.")
    return parser


def resolve_config(args):
    """Defaults, scenario file, overrides and dedicated flags, in that order."""
    config = read_config(args.config) if args.config else merge_config(None)
    config = apply_overrides(config, args.overrides)
    for dest, dotted in FLAG_KEYS.items():
        value = getattr(args, dest, None)
        if value is None:
            continue
        section, key = dotted.split('.')
        config[section][key] = validate_value(section, key, value, origin="--%s" % dest.replace('_', '-'))
    return config


@dataclass
class RunManifest:
    """Everything needed to reproduce an output file."""

    command: str
    argv: list
    config: dict
    seed: int
    version: str
    outputs: list = field(default_factory=list)
    started: str = ''
    wall_clock_s: float = 0.0

    def write(self, path):
        """Write the manifest as JSON."""
        with open(path, 'w') as fpt:
            fpt.write(dumps_json(asdict(self)))

    @classmethod
    def read(cls, path):
        """Read a manifest written by :meth:`write`."""
        with open(path) as fpt:
            return cls(**json.load(fpt))


def manifest_path(output):
    """Path of the manifest accompanying an output file."""
    return "%s.manifest.json" % output


def _output_format(args):
    if args.format:
        return args.format
    return 'json' if args.out and str(args.out).endswith('.json') else 'csv'


def _render(result, fmt):
    if isinstance(result, pd.DataFrame):
        if fmt == 'json':
            return dumps_json(result.to_dict(orient='records'))
        return result.to_csv(index=False)
    return dumps_json(result)


def _scenario(config):
    try:
        return build_scenario(config)
    except ValueError as err:
        raise ConfigError(str(err))


def cmd_simulate(args, config, seed):
    """Monte-Carlo SER of the configured detectors."""
    cfg, params = _scenario(config)
    sim = config['sim']
    estimates = simulate_detectors(cfg, params, sim['detectors'], sim['trials'], seed,
                                   frame_length=sim['frame_length'], chunk_frames=sim['chunk_frames'],
                                   min_errors=sim['min_errors'], threads=sim['threads'])
    for est in estimates.values():
        LOG.info("%s: SER %.4e [%.4e, %.4e] over %d symbols", est.detector, est.ser, est.ci_low, est.ci_high,
                 est.trials)
    return pd.DataFrame(estimate_rows(estimates, cfg, params), columns=RESULT_COLUMNS)


def cmd_analyze(args, config, seed):
    """Analytical curves over a ratio grid."""
    cfg, params = _scenario(config)
    rows = []
    if args.curve == 'tradeoff':
        table = tradeoff_curves(args.grid, cfg, ChannelRealization(1.0, 1.0, 1.0), protocol=params.protocol)
        return table.rename(columns={'ratio': 'alpha' if params.protocol == 'TS' else 'rho'})
    for ratio in args.grid:
        ratio = float(ratio)
        if args.curve == 'closed-ps':
            closed = avg_ser_closed_ps(ratio, cfg)
            rows.append({'rho': ratio, 'P_C': closed.P_C, 'P_E': closed.P_E, 'P_e': closed.P_e,
                         'dP_e': ser_derivative_ps(ratio, cfg)})
        elif args.curve == 'closed-ts':
            closed = avg_ser_closed_ts(ratio, cfg)
            rows.append({'alpha': ratio, 'P_C': closed.P_C, 'P_E': closed.P_E, 'P_e': closed.P_e})
        else:
            protocol, name = ('PS', 'rho') if args.curve == 'prop1-numeric' else ('TS', 'alpha')
            closed = (avg_ser_closed_ps if protocol == 'PS' else avg_ser_closed_ts)(ratio, cfg)
            numeric = avg_ser_numeric(ProtocolParams(protocol, ratio), cfg, method=args.average, seed=seed)
            rows.append({name: ratio, 'ser_numeric': numeric, 'P_e_closed': closed.P_e})
    LOG.info("Computed %d points of the %s curve", len(rows), args.curve)
    return pd.DataFrame(rows)


def cmd_optimize(args, config, seed):
    """Optimal ratio as a JSON document."""
    cfg, params = _scenario(config)
    sim = config['sim']
    if args.method == 'root':
        result = optimal_ratio_root(cfg, params.protocol)
    elif args.method == 'closed-min':
        result = optimal_ratio_minimize(cfg, params.protocol, 'closed')
    elif args.method == 'numeric-min':
        result = optimal_ratio_minimize(cfg, params.protocol, 'numeric')
    else:
        detector = 'proposed' if len(sim['detectors']) != 1 else sim['detectors'][0]
        result = optimal_ratio_simulated(cfg, params.protocol, args.grid, sim['trials'], seed, detector,
                                         frame_length=sim['frame_length'], chunk_frames=sim['chunk_frames'],
                                         min_errors=sim['min_errors'], threads=sim['threads'])
    LOG.info("Optimal %s ratio %.4f (%s)", result.protocol, result.ratio, result.method)
    return result.as_dict()


def cmd_sweep(args, config, seed):
    """Monte-Carlo sweep over one axis."""
    cfg, params = _scenario(config)
    sim = config['sim']
    spec = SweepSpec(axis=args.axis, values=tuple(args.values), network=cfg, protocol=params,
                     detectors=tuple(sim['detectors']), trials=sim['trials'], min_errors=sim['min_errors'],
                     seed=seed, frame_length=sim['frame_length'], chunk_frames=sim['chunk_frames'],
                     threads=sim['threads'], common_seed=args.common_seed)
    return run_sweep(spec)


def cmd_complexity(args, config, seed):
    """Operation counts for each modulation size and detector."""
    rows = []
    for M in args.sizes:
        for kind in DETECTOR_KINDS:
            rows.append({'M': M, 'detector': kind, **asdict(count_operations(M, kind, args.subintervals))})
    return pd.DataFrame(rows, columns=['M', 'detector', 'additions', 'multiplications', 'bessel_evals',
                                       'table_lookups'])


COMMANDS = {
    'simulate': cmd_simulate,
    'analyze': cmd_analyze,
    'optimize': cmd_optimize,
    'sweep': cmd_sweep,
    'complexity': cmd_complexity,
}


def execute(args, argv, config, seed):
    """Run a parsed command and emit its output."""
    started = datetime.now(timezone.utc)
    tic = time.monotonic()
    LOG.info("Running %s with seed %d", args.command, seed)
    text = _render(COMMANDS[args.command](args, config, seed), _output_format(args))
    if not args.out:
        print(text, end='' if text.endswith('\n') else '\n')
        return
    with open(args.out, 'w') as fpt:
        fpt.write(text)
    manifest = RunManifest(command=args.command, argv=list(argv), config=config, seed=seed, version=__version__,
                           outputs=[str(args.out)], started=started.isoformat(),
                           wall_clock_s=time.monotonic() - tic)
    manifest.write(manifest_path(args.out))
    LOG.info("Wrote %s", args.out)


def replay(args, parser):
    """Re-run the command stored in a manifest, optionally to another output."""
    manifest = RunManifest.read(args.manifest)
    argv = _replace_out(manifest.argv, args.out) if args.out else list(manifest.argv)
    stored = parser.parse_args(argv)
    LOG.info("Replaying %s from %s", manifest.command, args.manifest)
    execute(stored, argv, manifest.config, manifest.seed)


def _replace_out(argv, out):
    result = []
    skip = False
    for item in argv:
        if skip:
            skip = False
            continue
        if item in ('-o', '--out'):
            skip = True
            continue
        if item.startswith('--out='):
            continue
        result.append(item)
    return result + ['--out', out]


def main(argv=None):
    """Parse the command line, run the command and return the exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args)
    try:
        if args.command == 'replay':
            replay(args, parser)
        else:
            config = resolve_config(args)
            seed = resolve_seed(args.seed, config)
            execute(args, argv, config, seed)
    except (ConfigError, UnsupportedMethodError) as err:
        LOG.error(str(err))
        return EXIT_USAGE
    except (NoInteriorOptimumError, ArithmeticError, RuntimeError) as err:
        LOG.error("Numerical failure: %s", str(err))
        return EXIT_NUMERIC
    except ValueError as err:
        LOG.error(str(err))
        return EXIT_USAGE
    return EXIT_OK
