#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
'''
-------------------------------------------------------------------------------------
herding: Monte Carlo simulation of the three-state herding model of financial markets
-------------------------------------------------------------------------------------

About Herding
=============

``herding`` simulates an agent-based market in which each trader is a
fundamentalist, an optimistic chartist, or a pessimistic chartist, and
traders switch state by spontaneous moves and by imitation.  In the limit
of many agents the occupations follow a pair of coupled stochastic
differential equations, and the log-price is read from the imbalance of
optimists and pessimists.  A feedback of the price on the trading
activity, together with q-Gaussian exogenous noise, gives returns with
power-law tails and long-range memory of the volatility.

``herding`` integrates the equations with an adaptive Euler-Maruyama
scheme, samples the price once per minute, draws returns over windows of
T minutes, and estimates the probability density and the power spectral
density of absolute returns.  The same estimators read tick data from
exchanges, so model and empirical statistics can be compared window by
window.  An exact event-driven simulation of N agents is included as an
independent check of the stationary laws.

``herding`` uses a simple dictionary-style interface to store its results:
every table is kept with its provenance in an archive, in memory or as a
folder of csv files with json sidecars and a hashed manifest.


Major Features
==============

``herding`` provides:

    - ``simulate_path`` - one minute-sampled path of the occupations and the log-price
    - ``simulate_ensemble`` - many independent paths, vectorized over paths
    - ``agent_oracle`` - exact event-driven simulation of N agents
    - ``build_returns`` - returns with Gaussian or q-Gaussian noise and intraday seasonality
    - ``aggregate`` - returns over windows of T minutes, respecting session gaps
    - ``abs_return_pdf`` - log-binned density of absolute returns
    - ``power_spectrum`` - window-averaged power spectral density of absolute returns
    - ``hill_tail_exponent`` - tail exponent of the density of absolute returns
    - ``parse_ticks``, ``minute_returns`` - one-minute returns from tick files

``herding`` has the following archive types:

    - ``dir_archive`` - a dictionary-style interface to a folder of csv artifacts
    - ``dict_archive`` - a dictionary of artifacts held in memory

``herding`` also includes a command-line interface::

    $ herding simulate --preset qgaussian --realizations 8 --out runs/qgaussian
    $ herding ingest trades_2024.csv --out runs/nyse
    $ herding compare runs/qgaussian runs/nyse --out runs/qgauss_vs_nyse


Configuration
=============

Runs are configured from built-in defaults, a named preset (``qgaussian``,
``gaussian``, ``seasonal``), an optional YAML file, and command-line
flags, in that order.  The output directory defaults to
``$HERDING_OUTPUT``, or ``herding_output`` when it is not set.  A YAML
file may look like::

    preset: seasonal
    model: {a: 0.5, lam: 4}
    run:
      realizations: 8
      duration: 524288
      windows: [1, 3, 10, 30]
      seed: 1
    ingest:
      columns: {timestamp: time, price: price, symbol: ticker}
      calendar: {session_open: 570, session_length: 390}


Installation
============

``herding`` can be installed with ``pip``::

    $ pip install .


Requirements
============

``herding`` requires:

    - ``python`` (or ``pypy``), **>=3.9**
    - ``setuptools``, **>=42**
    - ``numpy``, **>=1.22**
    - ``scipy``, **>=1.9**
    - ``pandas``, **>=2.0**
    - ``pyyaml``, **>=5.4**
    - ``pox``, **>=0.3.5**


More Information
================

See ``herding.tests`` for a set of scripts that test the simulation,
the estimators, and the ingestion of tick data.  You can run the test
suite with ``python -m herding.tests``.  The source code is also
generally well documented, so further questions may be resolved by
inspecting the code itself.
'''

__version__ = '0.1.0.dev0'
__author__ = 'The herding developers'

__license__ = '''
Copyright (c) 2025 The herding developers.
All rights reserved.

Redistribution and use in source and binary forms, with or without
modification, are permitted provided that the following conditions
are met:

  - Redistributions of source code must retain the above copyright
    notice, this list of conditions and the following disclaimer.

  - Redistributions in binary form must reproduce the above copyright
    notice, this list of conditions and the following disclaimer in the
    documentation and/or other materials provided with the distribution.

  - Neither the names of the copyright holders nor the names of any of
    the contributors may be used to endorse or promote products derived
    from this software without specific prior written permission.

THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
"AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED
TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR
PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR
CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL,
EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO,
PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS;
OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY,
WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR
OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF
ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
'''
