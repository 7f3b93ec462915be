#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
stochastic dynamics of the three-state herding model

The fraction of fundamentalists, n_f, and the mood of the chartists, xi,
follow a pair of Ito equations whose speed is modulated by the trading
activity 1/tau = (1 + a|p|)**alpha, where p = (1-n_f)/n_f * xi is the
log-price.  The equations are integrated with an Euler-Maruyama scheme
whose step shrinks as the trading activity grows, and the state is clamped
a margin delta inside its domain after every step.

Main functions exported are::
    - transaction_rate: trading activity 1/tau for a given state
    - log_price: log-price for a given state
    - adaptive_dt: the variable time step for a given state
    - sde_step: advance a MarketState by one step
    - simulate_path: a PricePath sampled on a one-minute grid
    - simulate_ensemble: many independent paths, integrated side by side
"""
import math
import logging
import warnings
from collections import namedtuple

import numpy as np
from scipy import stats

from .crypto import hash
from .errors import ParameterError, IntegrationError
from .tools import generator

__all__ = ['ModelParams', 'MarketState', 'PricePath', 'transaction_rate',
           'log_price', 'adaptive_dt', 'sde_step', 'simulate_path',
           'simulate_ensemble', 'stationary_nf_law', 'stationary_mood_law',
           'DT_GRID', 'BURN_IN']

logger = logging.getLogger(__name__)

DT_GRID = 60.0    # seconds between recorded samples
BURN_IN = 10000   # minutes discarded before recording
_BLOCK = 1 << 14  # normal deviates drawn per refill


_fields = ('eps_cf', 'eps_fc', 'eps_cc', 'H', 'h', 'a', 'b',
           'alpha', 'lam', 'kappa', 'delta')

class ModelParams(namedtuple('ModelParams', _fields)):
    """constants of the herding model, with the values used in the
    reference experiment as defaults

    eps_cf = rate of spontaneous chartist -> fundamentalist switching (sigma_cf/h)
    eps_fc = rate of spontaneous fundamentalist -> chartist switching (sigma_fc/h)
    eps_cc = rate of spontaneous optimist <-> pessimist switching (sigma_cc/(H h))
    H = speed of chartist-chartist herding relative to chartist-fundamentalist
    h = herding rate, in 1/seconds
    a = weight of the endogenous noise (and of the activity feedback)
    b = scale of the exogenous noise
    alpha = exponent of the activity feedback
    lam = tail exponent of the q-Gaussian exogenous noise (q = 1 + 2/lam)
    kappa = precision factor of the variable time step
    delta = margin of the absorbing boundaries
    """
    __slots__ = ()

    def __new__(cls, eps_cf=0.1, eps_fc=3.0, eps_cc=3.0, H=300.0, h=1e-8,
                a=0.5, b=1.0, alpha=2.0, lam=4.0, kappa=0.03, delta=1e-6):
        values = (eps_cf, eps_fc, eps_cc, H, h, a, b, alpha, lam, kappa, delta)
        try:
            values = tuple(float(v) for v in values)
        except (TypeError, ValueError):
            raise ParameterError('model parameters must be numbers', 'ModelParams', module='model')
        self = super(ModelParams, cls).__new__(cls, *values)
        self.validate()
        return self

    def validate(self):
        """raise a ParameterError if any parameter is out of range"""
        bad = []
        if not all(math.isfinite(v) for v in self): bad.append('all finite')
        if not self.eps_cf > 0: bad.append('eps_cf > 0')
        if not self.eps_fc > 0: bad.append('eps_fc > 0')
        if not self.eps_cc > 0: bad.append('eps_cc > 0')
        if not self.H >= 1: bad.append('H >= 1')
        if not self.h > 0: bad.append('h > 0')
        if not self.a >= 0: bad.append('a >= 0')
        if not self.b > 0: bad.append('b > 0')
        if not self.alpha >= 0: bad.append('alpha >= 0')
        if not self.kappa > 0: bad.append('kappa > 0')
        if not 0 < self.delta < 0.5: bad.append('0 < delta < 0.5')
        if not self.lam > 2: bad.append('lam > 2')
        if bad:
            raise ParameterError('invalid model parameters, require: %s' % ', '.join(bad),
                                 'ModelParams', module='model', params=repr(tuple(self)))
        if self.lam <= 3:
            warnings.warn('lam=%r is outside the region 1 < q < 5/3 (lam > 3) '
                          'where the q-Gaussian return law holds' % self.lam,
                          RuntimeWarning, stacklevel=3)
        return

    def replace(self, **changes):
        """get a validated copy with the given fields replaced"""
        values = self._asdict()
        unknown = set(changes).difference(values)
        if unknown:
            raise ParameterError('unknown model parameters: %s' % ', '.join(sorted(unknown)),
                                 'ModelParams', module='model')
        values.update(changes)
        return self.__class__(**values)

    def as_dict(self):
        """get the parameters as a plain dict"""
        return dict(self._asdict())

    @property
    def hash(self):
        """stable hash of the parameter values"""
        return hash(tuple(self._asdict().items()))

    @property
    def step_scale(self):
        """the denominator h (1 + eps_cf + eps_fc + H (1 + 2 eps_cc))"""
        return self.h * (1.0 + self.eps_cf + self.eps_fc + self.H * (1.0 + 2.0 * self.eps_cc))


MarketState = namedtuple('MarketState', ['t', 'n_f', 'xi'])
MarketState.__doc__ = """instantaneous state of the market

    t = physical time, in seconds
    n_f = fraction of fundamentalists, in [delta, 1-delta]
    xi = mood of the chartists, in [-1+delta, 1-delta]
    """


def _rate(x, xi, a, alpha):
    return (1.0 + a * abs((1.0 - x) / x * xi)) ** alpha


def _increment(x, xi, rate, dt, z1, z2, params, sqrt=math.sqrt):
    """unclamped difference equations, with trading activity 'rate' = 1/tau"""
    hdt = params.h * dt
    hHdt = hdt * params.H
    x1 = x + hdt * ((1.0 - x) * params.eps_cf * rate - x * params.eps_fc) \
           + sqrt(2.0 * hdt * x * (1.0 - x) * rate) * z1
    xi1 = xi - 2.0 * hHdt * params.eps_cc * xi * rate \
             + sqrt(2.0 * hHdt * (1.0 - xi * xi) * rate) * z2
    return x1, xi1


def _check_domain(n_f):
    if np.any(np.asarray(n_f) == 0):
        raise ParameterError('the log-price is undefined at n_f = 0', 'log_price', module='model')
    return


def transaction_rate(n_f, xi, a, alpha):
    """get the trading activity 1/tau = (1 + a |(1-n_f)/n_f xi|)**alpha

    n_f: fraction of fundamentalists, in (0,1]
    xi: mood of the chartists, in [-1,1]
    a: weight of the activity feedback (a=0 switches the feedback off)
    alpha: feedback exponent

    Accepts scalars or numpy arrays.
    """
    _check_domain(n_f)
    return _rate(n_f, xi, a, alpha)


def log_price(n_f, xi):
    """get the log-price p = ln(P/P_f) = (1-n_f)/n_f xi"""
    _check_domain(n_f)
    return (1.0 - n_f) / n_f * xi


def adaptive_dt(state, params):
    """get the variable time step, in seconds, for the given MarketState

    dt = kappa**2 tau / (h (1 + eps_cf + eps_fc + H (1 + 2 eps_cc)))
    """
    tau = 1.0 / transaction_rate(state.n_f, state.xi, params.a, params.alpha)
    return params.kappa**2 * tau / params.step_scale


def _in_bounds(n_f, xi, delta):
    return delta <= n_f <= 1.0 - delta and -1.0 + delta <= xi <= 1.0 - delta


def sde_step(state, params, z1, z2, dt, step=None):
    """advance the state by one step of the difference equations

    state: MarketState within the clamping bounds
    params: ModelParams
    z1, z2: independent standard normal deviates for n_f and xi
    dt: step length in seconds (> 0)
    step: step index, reported if the step fails

    tau is evaluated once, at the pre-step state.  After the step, n_f is
    clamped to [delta, 1-delta] and xi to [-1+delta, 1-delta].
    """
    if not (dt > 0 and math.isfinite(dt)):
        raise ParameterError('dt must be positive and finite, got %r' % dt, 'sde_step', module='model')
    x, xi, delta = state.n_f, state.xi, params.delta
    if not _in_bounds(x, xi, delta):
        raise ParameterError('state %r is outside the clamping bounds' % (state,), 'sde_step', module='model')
    rate = _rate(x, xi, params.a, params.alpha)
    x1, xi1 = _increment(x, xi, rate, dt, z1, z2, params)
    if not (math.isfinite(x1) and math.isfinite(xi1)):
        raise IntegrationError('non-finite state after step', state=state, step=step)
    return MarketState(state.t + dt, min(max(x1, delta), 1.0 - delta),
                       min(max(xi1, -1.0 + delta), 1.0 - delta))


def stationary_nf_law(params):
    """get the stationary law of n_f without feedback, Beta(eps_cf, eps_fc)"""
    return stats.beta(params.eps_cf, params.eps_fc)


def stationary_mood_law(params):
    """get the stationary law of (1+xi)/2 without feedback, Beta(eps_cc, eps_cc)"""
    return stats.beta(params.eps_cc, params.eps_cc)


def _initial_state(params, rng, size=None):
    delta = params.delta
    x = np.clip(rng.beta(params.eps_cf, params.eps_fc, size), delta, 1.0 - delta)
    xi = np.clip(2.0 * rng.beta(params.eps_cc, params.eps_cc, size) - 1.0, -1.0 + delta, 1.0 - delta)
    if size is None:
        return float(x), float(xi)
    return x, xi


class PricePath(object):
    """log-price path sampled on a uniform one-minute grid

    n_f, xi, p = sampled state and log-price, one entry per minute
    seed = the integer seed of the path
    params = the ModelParams used to generate the path

    The sample with index i is the state at the end of minute i+1 after
    the burn-in, so t_min runs from 1 to len(path).
    """
    dt_grid = DT_GRID

    def __init__(self, n_f, xi, seed=None, params=None, p=None):
        self.n_f = np.asarray(n_f, dtype=float)
        self.xi = np.asarray(xi, dtype=float)
        if self.n_f.shape != self.xi.shape or self.n_f.ndim != 1:
            raise ParameterError('n_f and xi must be 1-d arrays of equal length', 'PricePath', module='model')
        self.p = log_price(self.n_f, self.xi) if p is None else np.asarray(p, dtype=float)
        self.seed = seed
        self.params = params
        return

    def __len__(self):
        return len(self.n_f)

    def __repr__(self):
        return "%s(len=%s, seed=%r)" % (self.__class__.__name__, len(self), self.seed)

    @property
    def t_min(self):
        """grid times, in minutes after the burn-in"""
        return np.arange(1, len(self) + 1)

    def to_frame(self):
        """get the path as a DataFrame with columns t_min, n_f, xi, p"""
        import pandas
        return pandas.DataFrame({'t_min': self.t_min, 'n_f': self.n_f,
                                 'xi': self.xi, 'p': self.p},
                                columns=['t_min', 'n_f', 'xi', 'p'])

    @classmethod
    def from_frame(cls, frame, seed=None, params=None):
        """build a PricePath from a DataFrame with columns n_f, xi, p"""
        return cls(frame['n_f'].to_numpy(), frame['xi'].to_numpy(),
                   seed=seed, params=params, p=frame['p'].to_numpy())

    def metadata(self):
        """get the provenance of the path"""
        params = None if self.params is None else self.params.as_dict()
        return {'kind': 'PricePath', 'dt_grid': self.dt_grid, 'length': len(self),
                'seed': self.seed, 'params': params,
                'params_hash': None if self.params is None else self.params.hash}


def simulate_path(params, duration, burn_in=BURN_IN, seed=None, initial=None):
    """integrate one path and sample it once per minute

    params: ModelParams
    duration: number of recorded minutes (>= 1)
    burn_in: number of minutes integrated and discarded first (>= 0)
    seed: integer seed; the same seed reproduces the same path bit for bit
    initial: (n_f, xi) starting point [default: drawn from the stationary
        laws of the model without feedback]

    Each step uses dt = min(adaptive_dt, time left to the next grid point),
    so samples fall exactly on the grid.
    """
    duration, burn_in = int(duration), int(burn_in)
    if duration < 1:
        raise ParameterError('duration must be at least one minute', 'simulate_path', module='model')
    if burn_in < 0:
        raise ParameterError('burn_in must be non-negative', 'simulate_path', module='model')
    rng = generator(seed, 'path')
    delta = params.delta
    lo, hi, mlo = delta, 1.0 - delta, -1.0 + delta
    a, alpha = params.a, params.alpha
    scale = params.kappa**2 / params.step_scale
    if initial is None:
        x, xi = _initial_state(params, rng)
    else:
        x, xi = min(max(float(initial[0]), lo), hi), min(max(float(initial[1]), mlo), hi)
    nf_out = np.empty(duration)
    xi_out = np.empty(duration)
    zs = rng.standard_normal((_BLOCK, 2)).tolist()
    k = 0
    steps = 0
    dt_min, dt_max = math.inf, 0.0
    isfinite = math.isfinite
    for minute in range(burn_in + duration):
        rem = DT_GRID
        while rem > 0.0:
            rate = _rate(x, xi, a, alpha)
            dt = scale / rate
            if dt >= rem:
                dt, rem = rem, 0.0
            else:
                rem -= dt
            if k == _BLOCK:
                zs = rng.standard_normal((_BLOCK, 2)).tolist()
                k = 0
            z1, z2 = zs[k]
            k += 1
            x1, xi1 = _increment(x, xi, rate, dt, z1, z2, params)
            if not (isfinite(x1) and isfinite(xi1)):
                t = (minute + 1) * DT_GRID - rem - dt
                raise IntegrationError('non-finite state after step', state=MarketState(t, x, xi),
                                       step=steps, operation='simulate_path')
            x = lo if x1 < lo else (hi if x1 > hi else x1)
            xi = mlo if xi1 < mlo else (hi if xi1 > hi else xi1)
            steps += 1
            if dt < dt_min: dt_min = dt
            if dt > dt_max: dt_max = dt
        if minute >= burn_in:
            nf_out[minute - burn_in] = x
            xi_out[minute - burn_in] = xi
    logger.debug('path seed=%r: %d steps over %d minutes, dt in [%g, %g] s',
                 seed, steps, burn_in + duration, dt_min, dt_max)
    return PricePath(nf_out, xi_out, seed=seed, params=params)


def simulate_ensemble(params, n_paths, duration, burn_in=0, seed=None,
                      record_every=1, initial=None):
    """integrate many independent paths side by side

    params: ModelParams
    n_paths: number of paths
    duration: number of minutes after the burn-in (>= 1)
    burn_in: number of minutes discarded first (>= 0)
    seed: integer seed for the whole ensemble
    record_every: record the state every this many minutes after the burn-in
    initial: (n_f, xi) starting point shared by all paths [default: drawn
        from the stationary laws of the model without feedback]

    Returns arrays (n_f, xi), each of shape (records, n_paths).  Every path
    takes its own adaptive steps and is capped at the one-minute grid, as in
    simulate_path; paths that reach a grid point wait for the others.
    """
    n_paths, duration, burn_in = int(n_paths), int(duration), int(burn_in)
    record_every = int(record_every)
    if n_paths < 1 or duration < 1 or burn_in < 0 or record_every < 1:
        raise ParameterError('need n_paths >= 1, duration >= 1, burn_in >= 0, record_every >= 1',
                             'simulate_ensemble', module='model')
    rng = generator(seed, 'ensemble')
    delta = params.delta
    if initial is None:
        x, xi = _initial_state(params, rng, n_paths)
    else:
        x = np.full(n_paths, min(max(float(initial[0]), delta), 1.0 - delta))
        xi = np.full(n_paths, min(max(float(initial[1]), -1.0 + delta), 1.0 - delta))
    scale = params.kappa**2 / params.step_scale
    nf_out, xi_out = [], []
    for minute in range(burn_in + duration):
        rem = np.full(n_paths, DT_GRID)
        idx = np.arange(n_paths)
        while idx.size:
            xa, xia, ra = x[idx], xi[idx], rem[idx]
            rate = _rate(xa, xia, params.a, params.alpha)
            dt = scale / rate
            capped = dt >= ra
            dt = np.where(capped, ra, dt)
            z = rng.standard_normal((2, idx.size))
            x1, xi1 = _increment(xa, xia, rate, dt, z[0], z[1], params, sqrt=np.sqrt)
            bad = ~(np.isfinite(x1) & np.isfinite(xi1))
            if bad.any():
                j = int(np.flatnonzero(bad)[0])
                t = (minute + 1) * DT_GRID - ra[j]
                raise IntegrationError('non-finite state after step',
                                       state=MarketState(t, float(xa[j]), float(xia[j])),
                                       operation='simulate_ensemble', minute=minute, path=int(idx[j]))
            x[idx] = np.clip(x1, delta, 1.0 - delta)
            xi[idx] = np.clip(xi1, -1.0 + delta, 1.0 - delta)
            rem[idx] = np.where(capped, 0.0, ra - dt)
            idx = idx[~capped]
        after = minute - burn_in + 1
        if after > 0 and after % record_every == 0:
            nf_out.append(x.copy())
            xi_out.append(xi.copy())
    return np.array(nf_out), np.array(xi_out)


# EOF
