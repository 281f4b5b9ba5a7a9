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

"""Search for the SER-minimizing PS/TS ratio."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd
from scipy import optimize

from swipt_ddf.analysis import avg_ser_closed_ps, avg_ser_closed_ts, avg_ser_numeric, ser_derivative_ps
from swipt_ddf.channel import ProtocolParams, check_ratio
from swipt_ddf.mc_engine import simulate_ser

LOG = logging.getLogger(__name__)

SEARCH_LOW = 0.01
SEARCH_HIGH = 0.99
SCAN_POINTS = 21
FINE_STEP = 1e-3
OBJECTIVES = ('closed', 'numeric')


class UnsupportedMethodError(ValueError):
    """The optimization method is not available for the protocol."""


class NoInteriorOptimumError(RuntimeError):
    """The objective has no minimum strictly inside the search range."""


@dataclass(frozen=True)
class RatioOptimum:
    """Result of a ratio search."""

    ratio: float
    method: str
    protocol: str
    objective_at_opt: float
    bracket: Optional[tuple] = None
    iterations: int = 0
    warning: Optional[str] = None
    grid: Optional[pd.DataFrame] = None

    def as_dict(self):
        """Return the scalar fields, the grid as a list of records."""
        result = {'ratio': self.ratio, 'method': self.method, 'protocol': self.protocol,
                  'objective_at_opt': self.objective_at_opt,
                  'bracket': list(self.bracket) if self.bracket is not None else None,
                  'iterations': self.iterations, 'warning': self.warning}
        if self.grid is not None:
            result['grid'] = self.grid.to_dict(orient='records')
        return result


def objective_function(cfg, protocol='PS', objective='closed', **numeric_options):
    """Average SER as a function of the ratio.

    Extra keyword arguments go to :func:`swipt_ddf.analysis.avg_ser_numeric`.
    """
    protocol = protocol.upper()
    if objective not in OBJECTIVES:
        raise ValueError("Unknown objective %s, use one of %s" % (objective, ', '.join(OBJECTIVES)))
    if objective == 'closed':
        closed = avg_ser_closed_ts if protocol == 'TS' else avg_ser_closed_ps
        return lambda ratio: closed(ratio, cfg).P_e
    return lambda ratio: avg_ser_numeric(ProtocolParams(protocol, ratio), cfg, **numeric_options)


def optimal_ratio_root(cfg, protocol='PS', xtol=1e-4):
    """Zero of the closed-form derivative of the PS average SER, by bisection."""
    if protocol.upper() != 'PS':
        raise UnsupportedMethodError("The derivative root is only available for the PS protocol, "
                                     "use a minimization method for %s" % protocol.upper())
    at_low = ser_derivative_ps(SEARCH_LOW, cfg)
    at_high = ser_derivative_ps(SEARCH_HIGH, cfg)
    if at_low * at_high > 0:
        trend = 'increases' if at_low > 0 else 'decreases'
        raise NoInteriorOptimumError("The average SER %s over the whole range [%g, %g], no interior optimum"
                                     % (trend, SEARCH_LOW, SEARCH_HIGH))
    root, result = optimize.bisect(ser_derivative_ps, SEARCH_LOW, SEARCH_HIGH, args=(cfg,), xtol=xtol,
                                   full_output=True)
    LOG.debug("Bisection converged in %d iterations", result.iterations)
    return RatioOptimum(ratio=float(root), method='derivative-root', protocol='PS',
                        objective_at_opt=avg_ser_closed_ps(root, cfg).P_e,
                        bracket=(SEARCH_LOW, SEARCH_HIGH), iterations=result.iterations)


def is_unimodal(values):
    """Check that a sequence first does not increase, then does not decrease."""
    steps = np.diff(np.asarray(values, dtype=float))
    rising = steps > 0
    if not np.any(rising):
        return True
    return not np.any(steps[np.argmax(rising):] < 0)


def _grid_table(ratios, values):
    return pd.DataFrame({'ratio': ratios, 'ser': values})


def optimal_ratio_minimize(cfg, protocol='PS', objective='closed', xtol=1e-4, **numeric_options):
    """Minimize the closed-form or numerically averaged SER over the ratio.

    A 21-point scan brackets the minimum for a golden-section search. When the
    scan is not unimodal, the minimum of a 1e-3 grid is reported instead; a
    minimum on the edge of the scan is refined with a bounded search. Both
    cases set the ``warning`` field.
    """
    protocol = protocol.upper()
    func = objective_function(cfg, protocol, objective, **numeric_options)
    method = 'closed-form-min' if objective == 'closed' else 'numeric-avg-min'
    scan = np.linspace(SEARCH_LOW, SEARCH_HIGH, SCAN_POINTS)
    values = np.array([func(ratio) for ratio in scan])
    best = int(np.argmin(values))

    if not is_unimodal(values):
        warning = "The coarse scan is not unimodal, reporting the minimum of a %g grid" % FINE_STEP
        LOG.warning(warning)
        fine = np.round(np.arange(SEARCH_LOW, SEARCH_HIGH + FINE_STEP / 2, FINE_STEP), 6)
        fine_values = np.array([func(ratio) for ratio in fine])
        index = int(np.argmin(fine_values))
        return RatioOptimum(ratio=float(fine[index]), method=method, protocol=protocol,
                            objective_at_opt=float(fine_values[index]), bracket=(SEARCH_LOW, SEARCH_HIGH),
                            iterations=len(fine), warning=warning, grid=_grid_table(fine, fine_values))

    if best in (0, SCAN_POINTS - 1):
        warning = "The minimum lies on the search boundary"
        LOG.warning("%s (%s = %g)", warning, 'alpha' if protocol == 'TS' else 'rho', scan[best])
        bracket = (scan[max(best - 1, 0)], scan[min(best + 1, SCAN_POINTS - 1)])
        result = optimize.minimize_scalar(func, bounds=bracket, method='bounded', options={'xatol': xtol})
    else:
        warning = None
        bracket = (scan[best - 1], scan[best], scan[best + 1])
        result = optimize.minimize_scalar(func, bracket=bracket, method='golden', options={'xtol': xtol})
    LOG.debug("%s search on %s: %d iterations", method, bracket, result.get('nit', 0))
    return RatioOptimum(ratio=float(result.x), method=method, protocol=protocol,
                        objective_at_opt=float(result.fun), bracket=tuple(float(b) for b in bracket),
                        iterations=int(result.get('nit', 0)), warning=warning,
                        grid=_grid_table(scan, values))


def optimal_ratio_simulated(cfg, protocol='PS', grid=None, trials=1000000, seed=0, detector='proposed',
                            **options):
    """Grid argmin of the simulated SER.

    Every grid point uses the same root seed. Remaining keyword arguments go
    to :func:`swipt_ddf.mc_engine.simulate_ser`.
    """
    protocol = protocol.upper()
    grid = np.round(np.arange(0.02, 0.99, 0.02), 6) if grid is None else np.asarray(grid, dtype=float)
    check_ratio(grid, 'alpha' if protocol == 'TS' else 'rho')
    rows = []
    for ratio in grid:
        est = simulate_ser(cfg, ProtocolParams(protocol, ratio), detector, trials, seed, **options)
        rows.append({'ratio': float(ratio), 'ser': est.ser, 'ci_low': est.ci_low, 'ci_high': est.ci_high,
                     'trials': est.trials, 'errors': est.errors})
        LOG.info("ratio %g: SER %.4e", ratio, est.ser)
    table = pd.DataFrame(rows)
    best = int(table['ser'].idxmin())
    warning = None
    neighbours = table.iloc[max(best - 1, 0):best + 2].drop(index=best)
    if np.any(neighbours['ci_low'] <= table.at[best, 'ci_high']):
        warning = "Confidence intervals of neighbouring grid points overlap the minimum"
        LOG.info(warning)
    return RatioOptimum(ratio=float(table.at[best, 'ratio']), method='simulated-grid', protocol=protocol,
                        objective_at_opt=float(table.at[best, 'ser']),
                        bracket=(float(grid.min()), float(grid.max())), iterations=len(grid),
                        warning=warning, grid=table)
