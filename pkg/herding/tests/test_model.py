#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution

import math
import warnings

import numpy as np
from scipy import stats

from herding.errors import ParameterError, IntegrationError
from herding.model import *
from herding.stats import ks_distance

# fast dynamics for stationary checks: relaxation in a few minutes
FAST = dict(eps_cf=2.0, eps_fc=6.0, eps_cc=3.0, H=1.0, h=1e-3, a=0.0, kappa=0.1)


def test_transaction_rate():
    assert transaction_rate(0.5, 0.0, 0.5, 2.0) == 1.0
    assert transaction_rate(0.2, -0.5, 0.5, 2.0) == 4.0
    assert transaction_rate(0.01, 0.9, 0.0, 2.0) == 1.0
    rates = transaction_rate(np.array([0.5, 0.2]), np.array([0.0, -0.5]), 0.5, 2.0)
    assert np.allclose(rates, [1.0, 4.0])
    try:
        transaction_rate(0.0, 0.5, 0.5, 2.0)
        assert False
    except ParameterError:
        pass


def test_log_price():
    assert log_price(0.5, 0.0) == 0.0
    assert log_price(0.5, 0.5) == 0.5
    assert abs(log_price(0.2, -0.5) + 2.0) < 1e-15
    assert np.sign(log_price(0.3, -0.1)) == -1
    try:
        log_price(0.0, 0.1)
        assert False
    except ParameterError:
        pass


def test_adaptive_dt():
    params = ModelParams()
    dt = adaptive_dt(MarketState(0.0, 0.5, 0.0), params)
    assert abs(dt - 9e-4 / (1e-8 * 2104.1)) < 1e-9
    assert abs(dt - 42.77) < 0.01
    quarter = adaptive_dt(MarketState(0.0, 0.2, -0.5), params)
    assert abs(quarter - dt / 4) < 1e-9
    assert abs(quarter - 10.69) < 0.01
    half = adaptive_dt(MarketState(0.0, 0.5, 0.0), params.replace(kappa=0.015))
    assert abs(half - dt / 4) < 1e-9


def test_params():
    params = ModelParams()
    assert params.eps_cf == 0.1 and params.H == 300.0 and params.h == 1e-8
    assert params.lam == 4.0 and params.kappa == 0.03 and params.delta == 1e-6
    assert params.replace(a=0.0).a == 0.0
    assert params.replace(a=0.0).hash != params.hash
    assert ModelParams().hash == params.hash
    for bad in (dict(eps_cf=0), dict(H=0.5), dict(delta=0.5), dict(lam=2.0), dict(b=-1)):
        try:
            ModelParams(**bad)
            assert False
        except ParameterError:
            pass
    try:
        params.replace(gamma=1)
        assert False
    except ParameterError:
        pass
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        ModelParams(lam=2.5)
    assert any(issubclass(w.category, RuntimeWarning) for w in caught)


def test_sde_step_fixed_points():
    params = ModelParams(a=0.0)
    x = params.eps_cf / (params.eps_cf + params.eps_fc)
    state = sde_step(MarketState(0.0, x, 0.3), params, 0.0, 0.0, 40.0)
    assert abs(state.n_f - x) < 1e-15
    assert state.t == 40.0
    state = sde_step(MarketState(0.0, 0.3, 0.0), params, 0.0, 0.0, 40.0)
    assert state.xi == 0.0


def test_sde_step_against_formula():
    params = ModelParams()
    x, xi, dt = 0.1, 0.5, 42.77
    # straight-line evaluation of the difference equations
    h, H = 1e-8, 300.0
    p = (1 - x) / x * xi
    r = (1 + 0.5 * abs(p)) ** 2
    x1 = x + h * dt * ((1 - x) * 0.1 * r - x * 3.0) + math.sqrt(2 * h * dt * x * (1 - x) * r)
    xi1 = xi - 2 * h * H * dt * 3.0 * xi * r + math.sqrt(2 * h * H * dt * (1 - xi ** 2) * r)
    state = sde_step(MarketState(0.0, x, xi), params, 1.0, 1.0, dt)
    assert abs(state.n_f - x1) < 1e-14
    assert abs(state.xi - xi1) < 1e-14
    assert state.t == dt


def test_sde_step_clamps():
    params = ModelParams()
    state = sde_step(MarketState(0.0, 0.5, 0.5), params, -1e6, 1e6, 40.0)
    assert state.n_f == params.delta
    assert state.xi == 1.0 - params.delta
    state = sde_step(MarketState(0.0, 0.5, 0.5), params, 1e6, -1e6, 40.0)
    assert state.n_f == 1.0 - params.delta
    assert state.xi == -1.0 + params.delta


def test_sde_step_errors():
    params = ModelParams()
    for dt in (0.0, -1.0, float('nan')):
        try:
            sde_step(MarketState(0.0, 0.5, 0.0), params, 0.0, 0.0, dt)
            assert False
        except ParameterError:
            pass
    try:
        sde_step(MarketState(0.0, 0.0, 0.0), params, 0.0, 0.0, 1.0)
        assert False
    except ParameterError:
        pass
    try:
        sde_step(MarketState(0.0, 0.5, 0.2), params, float('inf'), 0.0, 1.0, step=7)
        assert False
    except IntegrationError as error:
        assert error.step == 7
        assert error.state.n_f == 0.5
        assert error.as_report()['module'] == 'model'


def test_simulate_path():
    params = ModelParams()
    path = simulate_path(params, 300, burn_in=20, seed=11)
    assert len(path) == 300
    assert path.t_min[0] == 1 and path.t_min[-1] == 300
    assert np.all(path.n_f >= params.delta) and np.all(path.n_f <= 1 - params.delta)
    assert np.all(np.abs(path.xi) <= 1 - params.delta)
    assert np.allclose(path.p, (1 - path.n_f) / path.n_f * path.xi, rtol=1e-14, atol=0)
    same = simulate_path(params, 300, burn_in=20, seed=11)
    assert np.array_equal(path.n_f, same.n_f) and np.array_equal(path.xi, same.xi)
    other = simulate_path(params, 300, burn_in=20, seed=12)
    assert not np.array_equal(path.n_f, other.n_f)
    frame = path.to_frame()
    assert list(frame.columns) == ['t_min', 'n_f', 'xi', 'p']
    back = PricePath.from_frame(frame, seed=11, params=params)
    assert np.array_equal(back.p, path.p)
    assert path.metadata()['params_hash'] == params.hash
    try:
        simulate_path(params, 0)
        assert False
    except ParameterError:
        pass


def test_stationary_laws():
    params = ModelParams(**FAST)
    nf, xi = simulate_ensemble(params, 8000, 1, burn_in=30, seed=3, initial=(0.5, 0.0))
    assert nf.shape == (1, 8000)
    assert ks_distance(nf[-1], stationary_nf_law(params).cdf) < 0.035
    assert ks_distance((1 + xi[-1]) / 2, stationary_mood_law(params).cdf) < 0.035
    assert abs(np.mean(xi[-1])) < 0.02


def test_stationary_laws_reference():
    # slow n_f: start from the stationary draw and let the mood relax
    params = ModelParams(a=0.0)
    nf, xi = simulate_ensemble(params, 20000, 1, burn_in=2000, seed=4)
    mood = stationary_mood_law(params)
    assert ks_distance((1 + xi[-1]) / 2, mood.cdf) < 0.02
    # mass of Beta(0.1, 3) below delta sits on the clamp, so compare above a cutoff
    law, cut = stationary_nf_law(params), 0.01
    above = nf[-1][nf[-1] > cut]
    assert len(above) > 4000
    assert abs(len(above) / 20000.0 - law.sf(cut)) < 0.02
    tail = lambda x: (law.cdf(x) - law.cdf(cut)) / law.sf(cut)
    assert ks_distance(above, tail) < 0.035


def test_step_size_convergence():
    law = stats.beta(FAST['eps_cf'], FAST['eps_fc'])
    for kappa in (0.1, 0.05):
        params = ModelParams(**dict(FAST, kappa=kappa))
        nf, xi = simulate_ensemble(params, 20000, 1, burn_in=10, seed=5)
        assert abs(np.mean(nf) / law.mean() - 1) < 0.02
        assert abs(np.var(nf) / law.var() - 1) < 0.06


if __name__ == '__main__':
    test_transaction_rate()
    test_log_price()
    test_adaptive_dt()
    test_params()
    test_sde_step_fixed_points()
    test_sde_step_against_formula()
    test_sde_step_clamps()
    test_sde_step_errors()
    test_simulate_path()
    test_stationary_laws()
    test_stationary_laws_reference()
    test_step_size_convergence()
