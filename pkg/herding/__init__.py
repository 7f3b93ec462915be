#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution

# author, version, license, and long description
try: # the package is installed
    from .__info__ import __version__, __author__, __doc__, __license__
except: # pragma: no cover
    import os
    import sys
    parent = os.path.dirname(os.path.abspath(os.path.dirname(__file__)))
    sys.path.append(parent)
    # get distribution meta info
    from version import (__version__, __author__,
                         get_license_text, get_readme_as_rst)
    __license__ = get_license_text(os.path.join(parent, 'LICENSE'))
    __license__ = "\n%s" % __license__
    __doc__ = get_readme_as_rst(os.path.join(parent, 'README.md'))
    del os, sys, parent, get_license_text, get_readme_as_rst


from .errors import HerdingError, ParameterError, IntegrationError, \
                    IngestError, EstimationError, ComparisonError
from .model import ModelParams, MarketState, PricePath, transaction_rate, \
                   log_price, adaptive_dt, sde_step, simulate_path, \
                   simulate_ensemble, stationary_nf_law, stationary_mood_law
from .oracle import AgentCounts, Rates, agent_oracle, rates_from_params
from .noise import NoiseSpec, SeasonalityProfile, sigma_q, volatility, \
                   seasonal_b, return_increment, sample_unit_qgaussian
from .series import ReturnSeries, build_returns, normalize_unit_variance, \
                    aggregate
from .stats import DensityEstimate, SpectrumEstimate, abs_return_pdf, \
                   power_spectrum, hill_tail_exponent, ks_distance
from .ingest import TickRecord, TickFormat, SessionCalendar, parse_ticks, \
                    minute_returns, pool_by_group
from .config import RunConfig, load_config
from . import archives
from . import crypto
from . import tools


def license():
    """print license"""
    print (__license__)
    return

# end of file
