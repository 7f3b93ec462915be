#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
return series: build from a price path, normalize, and aggregate

Main functions exported are::
    - build_returns: one-minute returns from a PricePath and a noise law
    - normalize_unit_variance: rescale to unit (population) variance
    - aggregate: sum successive blocks of m returns
"""
import logging

import numpy as np

from .errors import EstimationError
from .noise import SeasonalityProfile, return_increment, seasonal_b
from .tools import generator

__all__ = ['ReturnSeries', 'build_returns', 'normalize_unit_variance', 'aggregate']

logger = logging.getLogger(__name__)

MODEL = 'model'
EMPIRICAL = 'empirical'


class ReturnSeries(object):
    """returns on a uniform grid with spacing window_T minutes

    values = the returns
    window_T = the return window, in minutes
    normalized = True if the values were rescaled to unit variance
    source = 'model' or 'empirical'
    symbol = instrument symbol (empirical series)
    scale = the factor the values were divided by when normalized
    seed = the seed that produced the series (model series)
    params_hash = hash of the ModelParams (model series)
    sessions = start index of each session segment, or None for one stream
    meta = dict of further provenance
    """

    def __init__(self, values, window_T=1, normalized=False, source=MODEL, symbol=None,
                 scale=1.0, seed=None, params_hash=None, sessions=None, meta=None):
        self.values = np.asarray(values, dtype=float)
        if self.values.ndim != 1:
            raise EstimationError('returns must be a 1-d sequence', 'ReturnSeries', module='series')
        if not window_T > 0:
            raise EstimationError('window_T must be positive', 'ReturnSeries', module='series')
        self.window_T = window_T
        self.normalized = bool(normalized)
        self.source = source
        self.symbol = symbol
        self.scale = float(scale)
        self.seed = seed
        self.params_hash = params_hash
        self.sessions = None if sessions is None else np.asarray(sessions, dtype=int)
        self.meta = {} if meta is None else dict(meta)
        return

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        name = self.symbol if self.symbol is not None else self.source
        return "%s(%s, T=%s, len=%s, normalized=%s)" % (self.__class__.__name__,
               name, self.window_T, len(self), self.normalized)

    def copy(self, **changes):
        """get a copy with the given attributes replaced"""
        kwds = dict(values=self.values, window_T=self.window_T,
                    normalized=self.normalized, source=self.source,
                    symbol=self.symbol, scale=self.scale, seed=self.seed,
                    params_hash=self.params_hash, sessions=self.sessions,
                    meta=self.meta)
        kwds.update(changes)
        return self.__class__(**kwds)

    def segments(self):
        """get the session segments as a list of arrays"""
        if self.sessions is None or not len(self.sessions):
            return [self.values]
        bounds = list(self.sessions) + [len(self)]
        return [self.values[i:j] for (i, j) in zip(bounds[:-1], bounds[1:])]

    def to_frame(self):
        """get the series as a DataFrame with columns idx, r"""
        import pandas
        return pandas.DataFrame({'idx': np.arange(len(self)), 'r': self.values},
                                columns=['idx', 'r'])

    @classmethod
    def from_frame(cls, frame, meta=None):
        """build a series from a DataFrame with column r and its metadata"""
        meta = {} if meta is None else dict(meta)
        keys = ('window_T', 'normalized', 'source', 'symbol', 'scale', 'seed',
                'params_hash', 'sessions')
        kwds = dict((k, meta.pop(k)) for k in keys if k in meta)
        meta.pop('kind', None); meta.pop('length', None)
        return cls(frame['r'].to_numpy(), meta=meta.get('meta'), **kwds)

    def metadata(self):
        """get the provenance of the series, as stored in the sidecar"""
        return {'kind': 'ReturnSeries', 'window_T': self.window_T,
                'length': len(self), 'normalized': self.normalized,
                'source': self.source, 'symbol': self.symbol,
                'scale': self.scale, 'seed': self.seed,
                'params_hash': self.params_hash,
                'sessions': None if self.sessions is None else self.sessions.tolist(),
                'meta': self.meta}


def build_returns(path, spec, a, profile=None, seed=None):
    """draw the returns of a PricePath, one per grid point

    path: PricePath
    spec: NoiseSpec
    a: weight of the endogenous noise
    profile: SeasonalityProfile [default: constant b=1]
    seed: integer seed; the noise stream is independent of the path stream

    The noise scale of sample i is seasonal_b(i mod session_length), so
    sample 0 falls on the first minute of a session.  The result is not
    normalized.
    """
    if not len(path):
        raise EstimationError('cannot build returns from an empty path',
                              'build_returns', module='series')
    if profile is None:
        profile = SeasonalityProfile.constant()
    rng = generator(seed, 'returns')
    minute = np.arange(len(path)) % profile.session_length
    r = return_increment(path.p, spec, a, seasonal_b(minute, profile), rng)
    params_hash = None if getattr(path, 'params', None) is None else path.params.hash
    logger.debug('built %d returns (%s, T=%s)', len(r), spec.kind, spec.T)
    return ReturnSeries(r, window_T=spec.T, source=MODEL, seed=seed,
                        params_hash=params_hash,
                        meta={'noise': spec._asdict(), 'a': a,
                              'seasonality': profile._asdict()})


def normalize_unit_variance(series):
    """divide a series by its population standard deviation"""
    if len(series) < 2:
        raise EstimationError('need at least 2 returns to normalize',
                              'normalize_unit_variance', module='series')
    std = float(np.std(series.values))
    if not std > 0 or not np.isfinite(std):
        raise EstimationError('cannot normalize a series with variance %r' % (std*std),
                              'normalize_unit_variance', module='series',
                              symbol=series.symbol)
    return series.copy(values=series.values / std, normalized=True,
                       scale=series.scale * std)


def _block_sums(x, m):
    n = len(x) // m
    return x[:n * m].reshape(n, m).sum(axis=1)


def aggregate(series, m, by_session=True):
    """sum successive disjoint blocks of m returns

    The trailing partial block is dropped.  If the series carries session
    starts (and by_session is True), blocks restart at each session so no
    block straddles a session boundary.
    """
    if int(m) != m or m < 1:
        raise EstimationError('the aggregation factor must be an integer >= 1, got %r' % m,
                              'aggregate', module='series')
    m = int(m)
    if m > len(series):
        raise EstimationError('aggregation factor %d exceeds the series length %d'
                              % (m, len(series)), 'aggregate', module='series')
    if m == 1:
        return series.copy(values=series.values.copy())
    if series.sessions is None or not by_session:
        return series.copy(values=_block_sums(series.values, m),
                           window_T=series.window_T * m, sessions=None)
    blocks, starts = [], []
    count = 0
    for segment in series.segments():
        sums = _block_sums(segment, m)
        if len(sums):
            starts.append(count)
            blocks.append(sums)
            count += len(sums)
    if not count:
        raise EstimationError('no session holds a full block of %d returns' % m,
                              'aggregate', module='series', symbol=series.symbol)
    return series.copy(values=np.concatenate(blocks), window_T=series.window_T * m,
                       sessions=starts)


# EOF
