#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution

import numpy as np

from herding.errors import EstimationError
from herding.model import ModelParams, PricePath, simulate_path
from herding.noise import NoiseSpec, SeasonalityProfile, GAUSSIAN
from herding.series import *
from herding.series import MODEL, EMPIRICAL


def _flat_path(n, n_f=0.5, xi=0.0):
    return PricePath(np.full(n, n_f), np.full(n, xi), seed=0)


def test_normalize():
    s = normalize_unit_variance(ReturnSeries([1.0, -1.0, 1.0, -1.0]))
    assert np.array_equal(s.values, [1.0, -1.0, 1.0, -1.0])
    assert s.normalized and s.scale == 1.0
    s = normalize_unit_variance(ReturnSeries([2.0, -2.0, 2.0, -2.0]))
    assert np.array_equal(s.values, [1.0, -1.0, 1.0, -1.0])
    assert s.scale == 2.0
    x = np.random.default_rng(4).standard_t(3, 10000) * 7.0
    once = normalize_unit_variance(ReturnSeries(x))
    assert abs(np.var(once.values) - 1) < 1e-12
    twice = normalize_unit_variance(once)
    assert np.allclose(once.values, twice.values, rtol=1e-12)
    for bad in ([3.0, 3.0, 3.0], [1.0]):
        try:
            normalize_unit_variance(ReturnSeries(bad))
            assert False
        except EstimationError:
            pass


def test_aggregate():
    s = ReturnSeries([1, 2, 3, 4, 5, 6])
    assert np.array_equal(aggregate(s, 2).values, [3, 7, 11])
    assert aggregate(s, 2).window_T == 2
    assert np.array_equal(aggregate(s, 4).values, [10])
    assert np.array_equal(aggregate(s, 1).values, s.values)
    assert aggregate(s, 1).values is not s.values
    # sums of blocks of 3 of blocks of 2 are blocks of 6
    x = ReturnSeries(np.arange(600, dtype=float))
    assert np.array_equal(aggregate(aggregate(x, 2), 3).values, aggregate(x, 6).values)
    assert aggregate(x, 5).values.sum() == x.values.sum()
    a, b = ReturnSeries([1.0, 2.0, 3.0, 4.0]), ReturnSeries([0.5, 0.25, 4.0, 8.0])
    both = ReturnSeries(2 * a.values + b.values)
    assert np.array_equal(aggregate(both, 2).values,
                          2 * aggregate(a, 2).values + aggregate(b, 2).values)
    for m in (0, 7, 1.5):
        try:
            aggregate(s, m)
            assert False
        except EstimationError:
            pass


def test_aggregate_sessions():
    s = ReturnSeries(np.arange(1, 11, dtype=float), sessions=[0, 5])
    assert [list(seg) for seg in s.segments()] == [[1, 2, 3, 4, 5], [6, 7, 8, 9, 10]]
    joined = aggregate(s, 2)
    assert np.array_equal(joined.values, [3, 7, 13, 17])
    assert list(joined.sessions) == [0, 2]
    assert np.array_equal(aggregate(s, 2, by_session=False).values, [3, 7, 11, 15, 19])
    try:
        aggregate(ReturnSeries([1.0, 2.0, 3.0, 4.0], sessions=[0, 2]), 3)
        assert False
    except EstimationError:
        pass


def test_build_returns():
    path = _flat_path(50000)
    spec = NoiseSpec(GAUSSIAN, None, 1.0)
    r = build_returns(path, spec, 0.0, SeasonalityProfile.constant(2.0), seed=9)
    assert r.window_T == 1.0 and not r.normalized and r.source == MODEL
    assert abs(np.std(r.values) / 2.0 - 1) < 0.02
    same = build_returns(path, spec, 0.0, SeasonalityProfile.constant(2.0), seed=9)
    assert np.array_equal(r.values, same.values)
    other = build_returns(path, spec, 0.0, SeasonalityProfile.constant(2.0), seed=10)
    assert not np.array_equal(r.values, other.values)
    # the intraday bump raises the volatility in mid-session
    bump = build_returns(path, spec, 0.0, SeasonalityProfile.intraday_bump(), seed=9)
    minute = np.arange(len(path)) % 390
    middle = np.abs(bump.values[np.abs(minute - 195) < 5]).mean()
    edge = np.abs(bump.values[minute < 60]).mean()
    assert middle > 2 * edge
    try:
        build_returns(_flat_path(0), spec, 0.0)
        assert False
    except EstimationError:
        pass


def _memory(x, lags=20):
    """mean autocorrelation of |x| over lags 1..lags"""
    x = np.abs(x) - np.abs(x).mean()
    return np.mean([np.dot(x[k:], x[:-k]) for k in range(1, lags + 1)]) / np.dot(x, x)


def test_volatility_clustering():
    params = ModelParams()
    spec = NoiseSpec(GAUSSIAN, None, 1.0)
    clustered, flat = [], []
    for seed in (21, 22, 23, 24):
        path = simulate_path(params, 30000, burn_in=500, seed=seed, initial=(0.05, 0.0))
        clustered.append(_memory(build_returns(path, spec, params.a, seed=seed).values))
        flat.append(_memory(build_returns(path, spec, 0.0, seed=seed).values))
    # without the endogenous noise |r| is independent: standard error near 7e-4
    assert abs(np.mean(flat)) < 0.003
    assert np.mean(clustered) > 0.003
    assert np.mean(clustered) > np.mean(flat) + 0.002


def test_frame():
    s = ReturnSeries([0.5, -0.25], window_T=3, symbol='XYZ', source=EMPIRICAL,
                     sessions=[0], meta={'note': 1})
    frame = s.to_frame()
    assert list(frame.columns) == ['idx', 'r']
    back = ReturnSeries.from_frame(frame, s.metadata())
    assert np.array_equal(back.values, s.values)
    assert back.window_T == 3 and back.symbol == 'XYZ' and back.source == EMPIRICAL
    assert list(back.sessions) == [0] and back.meta == {'note': 1}
    assert s.copy(symbol='ABC').symbol == 'ABC'


if __name__ == '__main__':
    test_normalize()
    test_aggregate()
    test_aggregate_sessions()
    test_build_returns()
    test_volatility_clustering()
    test_frame()
