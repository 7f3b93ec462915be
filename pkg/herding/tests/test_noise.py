#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution

import math

import numpy as np
from scipy import stats

from herding.errors import ParameterError
from herding.noise import *
from herding.stats import ks_distance, hill_tail_exponent
from herding.tools import generator


def test_sigma_q():
    # same formula, with plain gamma functions
    def scale(T, lam):
        c = math.sqrt(math.pi * (lam - 1)) * math.gamma((lam - 1) / 2) / math.gamma(lam / 2)
        return c ** (1 / (lam - 1)) * ((lam - 2) / lam * T) ** (lam / (2 * (lam - 1)))
    assert abs(sigma_q(1.0, 4.0) - 0.8795) < 1e-3
    for (T, lam) in ((1.0, 4.0), (3.0, 4.0), (10.0, 2.5), (30.0, 7.0)):
        assert abs(sigma_q(T, lam) / scale(T, lam) - 1) < 1e-12
    assert abs(sigma_q(3.0, 4.0) / sigma_q(1.0, 4.0) - 3 ** (2.0 / 3)) < 1e-12
    assert sigma_q(10.0, 4.0) > sigma_q(3.0, 4.0) > sigma_q(1.0, 4.0)
    for (T, lam) in ((1.0, 2.0), (0.0, 4.0), (1.0, float('inf'))):
        try:
            sigma_q(T, lam)
            assert False
        except ParameterError:
            pass


def test_qgaussian_pdf():
    u = np.linspace(-50, 50, 2001)
    for lam in (2.5, 4.0, 7.0):
        assert np.allclose(unit_qgaussian_pdf(u, lam), stats.t(lam - 1).pdf(u), rtol=1e-11, atol=0)
    r = np.linspace(-5, 5, 11)
    scale = 2.0 * sigma_q(3.0, 4.0)
    assert np.allclose(qgaussian_pdf(r, 2.0, 3.0, 4.0), stats.t(3, scale=scale).pdf(r), rtol=1e-11)


def test_sampling():
    rng = generator(1, 'returns')
    u = sample_unit_qgaussian(rng, 4.0, 10 ** 6)
    assert ks_distance(u, stats.t(3).cdf) < 0.01
    assert abs(np.median(u)) < 0.01
    assert abs(hill_tail_exponent(u, 0.01) - 4.0) < 0.5
    z = draw_unit(GAUSSIAN, None, 10 ** 5, generator(2, 'returns'))
    assert ks_distance(z, stats.norm.cdf) < 0.01


def test_spec():
    spec = NoiseSpec()
    assert spec == ('qgaussian', 4.0, 1.0)
    assert spec.q == 1.5
    assert abs(spec.scale - sigma_q(1.0, 4.0)) < 1e-15
    assert NoiseSpec('Gaussian', None, 4.0).scale == 2.0
    assert NoiseSpec('q-gaussian', 3.0).kind == QGAUSSIAN
    for bad in (dict(kind='levy'), dict(lam=2.0), dict(T=0.0)):
        try:
            NoiseSpec(**bad)
            assert False
        except ParameterError:
            pass


def test_volatility():
    assert volatility(0.0, 0.5, 1.0) == 1.0
    assert volatility(-4.0, 0.5, 2.0) == 6.0
    assert np.allclose(volatility(np.array([-2.0, 2.0]), 1.0, 1.0), [3.0, 3.0])


def test_seasonality():
    flat = SeasonalityProfile.constant(2.0)
    assert seasonal_b(17, flat) == 2.0
    assert np.array_equal(seasonal_b(np.arange(3), flat), [2.0, 2.0, 2.0])
    bump = SeasonalityProfile.intraday_bump()
    assert seasonal_b(195, bump) == 1.5
    assert abs(seasonal_b(0, bump) - 0.5) < 1e-12
    assert seasonal_b(390, bump) == seasonal_b(0, bump)
    assert seasonal_b(195 + 20, bump) == seasonal_b(195 - 20, bump)
    b = seasonal_b(np.arange(1000), bump)
    assert np.all(b >= 0.5) and np.all(b <= 1.5)
    for bad in (dict(mode='weekly'), dict(b=0.0), dict(mode='bump', w=0.0)):
        try:
            SeasonalityProfile(**bad)
            assert False
        except ParameterError:
            pass


def test_return_increment():
    rng = generator(3, 'returns')
    spec = NoiseSpec(GAUSSIAN, None, 1.0)
    r = return_increment(np.zeros(10 ** 5), spec, 0.0, 1.0, rng)
    assert ks_distance(r, stats.norm.cdf) < 0.01
    wide = return_increment(np.zeros(10 ** 5), NoiseSpec(GAUSSIAN, None, 4.0), 0.0, 1.0, rng)
    assert abs(np.var(wide) / 4.0 - 1) < 0.02
    scaled = return_increment(np.full(10 ** 5, 2.0), spec, 0.5, 1.0, rng)
    assert abs(np.std(scaled) / 2.0 - 1) < 0.02
    assert np.ndim(return_increment(1.0, NoiseSpec(), 0.5, 1.0, rng)) == 0


if __name__ == '__main__':
    test_sigma_q()
    test_qgaussian_pdf()
    test_sampling()
    test_spec()
    test_volatility()
    test_seasonality()
    test_return_increment()
