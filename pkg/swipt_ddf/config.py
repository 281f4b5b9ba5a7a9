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

"""Handling the yaml scenario configurations."""

import copy
import logging
import os

import yaml
from yaml import SafeLoader

from swipt_ddf.channel import LINKS, NetworkConfig, ProtocolParams
from swipt_ddf.detectors import SIMULATED_DETECTORS

LOG = logging.getLogger(__name__)

SEED_ENV_VARIABLE = 'SWIPT_SEED'
DEFAULT_SEED = 20240607

DEFAULT_CONFIG = {
    'network': {
        'snr_db': 30.0,
        'M': 2,
        'delta': 0.6,
        'P_s': 1.0,
        'T_s': 1.0,
        'd_sd': 3.0,
        'd_sr': 1.5,
        'd_rd': 1.5,
        'pathloss_exponent': 2.7,
        'noise_split': [0.5, 0.5],
    },
    'protocol': {
        'protocol': 'PS',
        'rho': 0.8,
        'alpha': 0.4,
    },
    'sim': {
        'trials': 100000,
        'min_errors': 200,
        'frame_length': 100,
        'chunk_frames': 100,
        'seed': None,
        'threads': 1,
        'detectors': list(SIMULATED_DETECTORS),
    },
}


class ConfigError(ValueError):
    """Invalid scenario configuration."""


def _number(value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError("expected a number, got %r" % (value,))
    return float(value)


def _positive(value):
    value = _number(value)
    if value <= 0:
        raise ValueError("must be positive, got %g" % value)
    return value


def _open_unit(value):
    value = _number(value)
    if not 0 < value < 1:
        raise ValueError("must be strictly between 0 and 1, got %g" % value)
    return value


def _efficiency(value):
    value = _number(value)
    if not 0 < value <= 1:
        raise ValueError("must be in (0, 1], got %g" % value)
    return value


def _integer(minimum, optional=False):
    def check(value):
        if value is None and optional:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError("expected an integer, got %r" % (value,))
        if value < minimum:
            raise ValueError("must be at least %d, got %d" % (minimum, value))
        return value
    return check


def _pair(value):
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValueError("expected a pair of noise fractions, got %r" % (value,))
    first, second = (_number(v) for v in value)
    if first < 0 or second < 0 or first + second <= 0:
        raise ValueError("noise fractions must be non-negative and not both zero")
    return [first, second]


def _noise_split(value):
    if isinstance(value, dict):
        unknown = set(value) - set(LINKS)
        if unknown:
            raise ValueError("unknown links %s, use %s" % (', '.join(sorted(unknown)), ', '.join(LINKS)))
        return {link: _pair(value.get(link, [0.5, 0.5])) for link in LINKS}
    return _pair(value)


def _protocol(value):
    value = str(value).upper()
    if value not in ('PS', 'TS'):
        raise ValueError("must be PS or TS, got %s" % value)
    return value


def _detectors(value):
    if value == 'all':
        return list(SIMULATED_DETECTORS)
    if isinstance(value, str):
        value = [item.strip() for item in value.split(',')]
    if not isinstance(value, (list, tuple)) or not value:
        raise ValueError("expected a list of detectors")
    unknown = [item for item in value if item not in SIMULATED_DETECTORS]
    if unknown:
        raise ValueError("unknown detectors %s, use %s"
                         % (', '.join(map(str, unknown)), ', '.join(SIMULATED_DETECTORS)))
    return list(value)


SCHEMA = {
    'network': {
        'snr_db': _number,
        'M': _integer(2),
        'delta': _efficiency,
        'P_s': _positive,
        'T_s': _positive,
        'd_sd': _positive,
        'd_sr': _positive,
        'd_rd': _positive,
        'pathloss_exponent': _positive,
        'noise_split': _noise_split,
    },
    'protocol': {
        'protocol': _protocol,
        'rho': _open_unit,
        'alpha': _open_unit,
    },
    'sim': {
        'trials': _integer(1),
        'min_errors': _integer(1, optional=True),
        'frame_length': _integer(1),
        'chunk_frames': _integer(1),
        'seed': _integer(0, optional=True),
        'threads': _integer(1),
        'detectors': _detectors,
    },
}


def _where(origin, lines, key):
    line = lines.get(key) if lines else None
    if origin and line:
        return "%s:%d: " % (origin, line)
    if origin:
        return "%s: " % origin
    return ""


def validate_value(section, key, value, origin=None, lines=None):
    """Check one configuration value and return it normalized."""
    dotted = "%s.%s" % (section, key)
    if section not in SCHEMA:
        raise ConfigError("%sunknown section '%s', use one of %s"
                          % (_where(origin, lines, section), section, ', '.join(SCHEMA)))
    if key not in SCHEMA[section]:
        raise ConfigError("%sunknown key '%s'" % (_where(origin, lines, dotted), dotted))
    try:
        return SCHEMA[section][key](value)
    except ValueError as err:
        raise ConfigError("%sinvalid value for '%s': %s" % (_where(origin, lines, dotted), dotted, err))


def key_lines(text):
    """Map 'section' and 'section.key' to their 1-based line in a YAML document."""
    lines = {}
    root = yaml.compose(text, Loader=SafeLoader)
    if not isinstance(root, yaml.MappingNode):
        return lines
    for section_node, body in root.value:
        section = section_node.value
        lines[section] = section_node.start_mark.line + 1
        if isinstance(body, yaml.MappingNode):
            for key_node, _ in body.value:
                lines["%s.%s" % (section, key_node.value)] = key_node.start_mark.line + 1
    return lines


def merge_config(overrides, origin=None, lines=None):
    """Validate a nested mapping and merge it over the defaults."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    if overrides is None:
        return config
    if not isinstance(overrides, dict):
        raise ConfigError("%sthe configuration must be a mapping of sections" % _where(origin, None, None))
    for section, body in overrides.items():
        if section not in SCHEMA:
            raise ConfigError("%sunknown section '%s', use one of %s"
                              % (_where(origin, lines, section), section, ', '.join(SCHEMA)))
        if body is None:
            continue
        if not isinstance(body, dict):
            raise ConfigError("%ssection '%s' must be a mapping" % (_where(origin, lines, section), section))
        for key, value in body.items():
            config[section][key] = validate_value(section, key, value, origin, lines)
    return config


def read_config(config_filepath):
    """Read a scenario file and merge it over the defaults."""
    with open(config_filepath, 'r') as fp_:
        text = fp_.read()
    try:
        raw = yaml.load(text, Loader=SafeLoader)
        lines = key_lines(text)
    except yaml.YAMLError as err:
        mark = getattr(err, 'problem_mark', None)
        where = "%s:%d" % (config_filepath, mark.line + 1) if mark is not None else str(config_filepath)
        raise ConfigError("%s: invalid YAML: %s" % (where, getattr(err, 'problem', err)))
    LOG.debug("Read scenario file %s", config_filepath)
    return merge_config(raw, origin=str(config_filepath), lines=lines)


def parse_override(item):
    """Split a 'section.key=value' override, the value parsed as a YAML scalar."""
    dotted, sep, text = item.partition('=')
    section, dot, key = dotted.strip().partition('.')
    if not sep or not dot or not section or not key:
        raise ConfigError("Override '%s' must look like section.key=value" % item)
    try:
        value = yaml.load(text, Loader=SafeLoader)
    except yaml.YAMLError as err:
        raise ConfigError("Override '%s' has an unparsable value: %s" % (item, err))
    return section, key, value


def apply_overrides(config, overrides):
    """Apply 'section.key=value' overrides to a configuration, returning a copy."""
    config = copy.deepcopy(config)
    for item in overrides or ():
        section, key, value = parse_override(item)
        config[section][key] = validate_value(section, key, value, origin="--set %s" % item)
    return config


def build_scenario(config):
    """Build the network and protocol objects of a configuration."""
    network = dict(config['network'])
    split = network['noise_split']
    network['noise_split'] = ({link: tuple(pair) for link, pair in split.items()} if isinstance(split, dict)
                              else tuple(split))
    try:
        cfg = NetworkConfig(**network)
    except ValueError as err:
        raise ConfigError("network: %s" % err)
    protocol = config['protocol']['protocol']
    ratio = config['protocol']['alpha' if protocol == 'TS' else 'rho']
    return cfg, ProtocolParams(protocol, ratio)


def resolve_seed(cli_seed, config):
    """Root seed: command line, then sim.seed, then the environment, then the default."""
    if cli_seed is not None:
        return int(cli_seed)
    if config['sim'].get('seed') is not None:
        return int(config['sim']['seed'])
    env_seed = os.environ.get(SEED_ENV_VARIABLE)
    if env_seed is not None:
        try:
            return int(env_seed)
        except ValueError:
            raise ConfigError("%s must be an integer, got '%s'" % (SEED_ENV_VARIABLE, env_seed))
    return DEFAULT_SEED
