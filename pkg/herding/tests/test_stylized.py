#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
stylized facts of returns simulated with the reference parameters

A reduced campaign: four paths of 2**17 minutes, shared by every test.
"""
import numpy as np

from herding.model import ModelParams, simulate_path
from herding.noise import NoiseSpec, SeasonalityProfile, GAUSSIAN, QGAUSSIAN
from herding.series import build_returns, normalize_unit_variance, aggregate
from herding.stats import abs_return_pdf, power_spectrum, loglog_slope

PARAMS = ModelParams()
SEEDS = (1, 2, 3, 4)
MINUTES = 1 << 17
WINDOW = 1 << 14
SESSION = 390
_paths = {}


def _simulated():
    if not _paths:
        for seed in SEEDS:
            _paths[seed] = simulate_path(PARAMS, MINUTES, burn_in=1000, seed=seed)
    return [_paths[seed] for seed in SEEDS]


def _returns(kind, profile=None):
    spec = NoiseSpec(kind, PARAMS.lam if kind == QGAUSSIAN else None, 1.0)
    return [normalize_unit_variance(build_returns(path, spec, PARAMS.a, profile, seed=seed))
            for (seed, path) in zip(SEEDS, _simulated())]


def test_pdf_tail():
    series = _returns(QGAUSSIAN)
    exponent = {}
    for T in (1, 3, 10, 30):
        pdf = abs_return_pdf([aggregate(s, T) for s in series])
        exponent[T] = -loglog_slope(pdf.bin_centers, pdf.density, 3.0, 30.0)
    assert 2.5 <= exponent[1] <= 4.5
    for T in (3, 10, 30):
        assert abs(exponent[T] - exponent[1]) <= 1.0


def test_psd_regimes():
    psd = power_spectrum(_returns(QGAUSSIAN), WINDOW).smooth(10)
    low = loglog_slope(psd.freqs, psd.power, 1e-4, 1e-3)
    high = loglog_slope(psd.freqs, psd.power, 1e-2, 1e-1)
    assert low < 0
    assert abs(low - high) > 0.2


def test_gaussian_contrast():
    def beyond(series, x=10.0):
        return np.mean(np.concatenate([np.abs(s.values) > x for s in series]))
    q, g = beyond(_returns(QGAUSSIAN)), beyond(_returns(GAUSSIAN))
    assert g > 0
    # the endogenous volatility alone gives Gaussian noise a power-law tail
    assert q > 1.5 * g


def test_seasonality_peaks():
    profile = SeasonalityProfile.intraday_bump()
    psd = power_spectrum(_returns(QGAUSSIAN, profile), WINDOW)
    for n in (1, 2, 3):
        i = int(np.argmin(np.abs(psd.freqs - n / float(SESSION))))
        background = np.median(np.r_[psd.power[i - 30:i - 3], psd.power[i + 4:i + 31]])
        assert psd.power[i] >= 3 * background


if __name__ == '__main__':
    test_pdf_tail()
    test_psd_regimes()
    test_gaussian_contrast()
    test_seasonality_peaks()
