#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
exogenous noise: Gaussian and q-Gaussian returns, volatility, seasonality

The return over a window of T minutes is the volatility b(t) (1 + a|p|)
times a scaled deviate: sqrt(T) times a standard normal deviate, or
sigma_q(T) times a unit q-Gaussian deviate.  With q = 1 + 2/lam the unit
q-Gaussian is a Student-t law with lam-1 degrees of freedom, and its
density falls off as |u|**-lam.
"""
import math
from collections import namedtuple

import numpy as np
from scipy import special

from .errors import ParameterError

__all__ = ['NoiseSpec', 'SeasonalityProfile', 'sigma_q', 'unit_qgaussian_pdf',
           'qgaussian_pdf', 'sample_unit_qgaussian', 'draw_unit', 'volatility',
           'seasonal_b', 'return_increment', 'GAUSSIAN', 'QGAUSSIAN']

GAUSSIAN = 'gaussian'
QGAUSSIAN = 'qgaussian'
CONSTANT = 'constant'
BUMP = 'bump'


def _check_lam(lam, operation):
    if not (lam > 2 and math.isfinite(lam)):
        raise ParameterError('need a finite tail exponent lam > 2, got %r' % (lam,),
                             operation, module='noise')


class NoiseSpec(namedtuple('NoiseSpec', ['kind', 'lam', 'T'])):
    """the law of the exogenous noise

    kind = 'gaussian' or 'qgaussian'
    lam = tail exponent of the q-Gaussian (ignored for gaussian noise)
    T = return window, in minutes
    """
    __slots__ = ()

    def __new__(cls, kind=QGAUSSIAN, lam=4.0, T=1.0):
        kind = str(kind).lower().replace('-', '').replace('_', '')
        if kind not in (GAUSSIAN, QGAUSSIAN):
            raise ParameterError("noise kind must be 'gaussian' or 'qgaussian', got %r" % kind,
                                 'NoiseSpec', module='noise')
        lam = None if lam is None else float(lam)
        if kind == QGAUSSIAN:
            _check_lam(lam, 'NoiseSpec')
        if not float(T) > 0:
            raise ParameterError('the window T must be positive', 'NoiseSpec', module='noise')
        return super(NoiseSpec, cls).__new__(cls, kind, lam, float(T))

    @property
    def q(self):
        """the Tsallis index 1 + 2/lam"""
        return 1.0 + 2.0 / self.lam if self.kind == QGAUSSIAN else 1.0

    @property
    def scale(self):
        """factor applied to a unit deviate for the window T"""
        if self.kind == GAUSSIAN:
            return math.sqrt(self.T)
        return sigma_q(self.T, self.lam)


class SeasonalityProfile(namedtuple('SeasonalityProfile',
                         ['mode', 'b', 'w', 'base', 'peak_offset', 'session_length'])):
    """intraday profile of the noise scale b(t)

    mode = 'constant' (b(t) = b) or 'bump' (a Gaussian bump over a floor)
    w = width of the bump, in minutes
    base = floor of the bump profile
    peak_offset = minute of the session at which the bump peaks
    session_length = period of the profile, in minutes
    """
    __slots__ = ()

    def __new__(cls, mode=CONSTANT, b=1.0, w=20.0, base=0.5, peak_offset=195.0,
                session_length=390):
        mode = str(mode).lower()
        if mode not in (CONSTANT, BUMP):
            raise ParameterError("seasonality mode must be 'constant' or 'bump', got %r" % mode,
                                 'SeasonalityProfile', module='noise')
        self = super(SeasonalityProfile, cls).__new__(cls, mode, float(b), float(w),
                     float(base), float(peak_offset), int(session_length))
        bad = []
        if mode == CONSTANT and not self.b > 0: bad.append('b > 0')
        if mode == BUMP and not self.w > 0: bad.append('w > 0')
        if mode == BUMP and not self.base >= 0: bad.append('base >= 0')
        if not self.session_length > 0: bad.append('session_length > 0')
        if bad:
            raise ParameterError('invalid seasonality, require: %s' % ', '.join(bad),
                                 'SeasonalityProfile', module='noise')
        return self

    @classmethod
    def constant(cls, b=1.0):
        """a profile with the fixed scale b"""
        return cls(CONSTANT, b=b)

    @classmethod
    def intraday_bump(cls, w=20.0, base=0.5, peak_offset=195.0, session_length=390):
        """a Gaussian bump of activity in the middle of each session"""
        return cls(BUMP, w=w, base=base, peak_offset=peak_offset,
                   session_length=session_length)


def sigma_q(T, lam):
    """get the scale of the q-Gaussian return law over a window of T minutes

    sigma_q = [sqrt(pi (lam-1)) G((lam-1)/2) / G(lam/2)]**(1/(lam-1))
              * [(lam-2)/lam T]**(lam/(2 (lam-1)))
    """
    _check_lam(lam, 'sigma_q')
    if not T > 0:
        raise ParameterError('the window T must be positive', 'sigma_q', module='noise')
    nu = lam - 1.0
    log_c = 0.5 * math.log(math.pi * nu) + special.gammaln(0.5 * nu) - special.gammaln(0.5 * lam)
    return math.exp(log_c / nu) * ((lam - 2.0) / lam * T) ** (lam / (2.0 * nu))


def unit_qgaussian_pdf(u, lam):
    """density of the unit q-Gaussian, q = 1 + 2/lam

    (1 - (1-q) u**2/(3-q))**(1/(1-q)), normalized; equal to the Student-t
    density with lam-1 degrees of freedom
    """
    _check_lam(lam, 'unit_qgaussian_pdf')
    q = 1.0 + 2.0 / lam
    u = np.asarray(u, dtype=float)
    log_norm = special.gammaln(0.5 * lam) - special.gammaln(0.5 * (lam - 1.0)) \
               - 0.5 * math.log(math.pi * (lam - 1.0))
    return np.exp(log_norm + np.log1p(-(1.0 - q) * u * u / (3.0 - q)) / (1.0 - q))


def qgaussian_pdf(r, sigma, T, lam):
    """density of the return r over a window of T minutes at volatility sigma"""
    scale = sigma * sigma_q(T, lam)
    return unit_qgaussian_pdf(np.asarray(r, dtype=float) / scale, lam) / scale


def sample_unit_qgaussian(rng, lam, size=None):
    """draw unit q-Gaussian deviates, as Student-t(lam-1) deviates"""
    _check_lam(lam, 'sample_unit_qgaussian')
    return rng.standard_t(lam - 1.0, size)


def draw_unit(kind, lam, size, rng):
    """draw unit deviates of the given noise kind"""
    if kind == GAUSSIAN:
        return rng.standard_normal(size)
    return sample_unit_qgaussian(rng, lam, size)


def volatility(p, a, b_t):
    """get the noise scale b_t (1 + a|p|) at log-price p"""
    return b_t * (1.0 + a * np.abs(p))


def seasonal_b(t, profile):
    """get the noise scale at minute t of the session cycle

    For the bump profile the distance to the peak is measured on the circle
    of circumference session_length, so the profile is periodic.
    """
    if profile.mode == CONSTANT:
        return profile.b if np.ndim(t) == 0 else np.full(np.shape(t), profile.b)
    L = profile.session_length
    d = np.abs(np.mod(t, L) - profile.peak_offset % L)
    d = np.minimum(d, L - d)
    return np.exp(-(d / profile.w) ** 2) + profile.base


def return_increment(p, spec, a, b_t, rng):
    """draw the return over the window spec.T for log-price p

    p and b_t may be arrays, giving one return per entry.
    """
    sigma = volatility(np.asarray(p, dtype=float), a, b_t)
    z = draw_unit(spec.kind, spec.lam, np.shape(sigma) or None, rng)
    return sigma * spec.scale * z


# EOF
