#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
statistics of absolute returns

Main functions exported are::
    - abs_return_pdf: log-binned density of |r|, pooled over series
    - power_spectrum: window-averaged periodogram of |r|, averaged over series
    - hill_tail_exponent: tail exponent of the density of |r|
    - ks_distance, ks_two_sample: Kolmogorov-Smirnov statistics
    - loglog_slope: least-squares slope on log-log axes

Both estimates are fold-style: partial results from disjoint sets of
series combine with ``merge`` in any order.
"""
import logging

import numpy as np
from scipy import stats as _stats

from .errors import EstimationError

__all__ = ['DensityEstimate', 'SpectrumEstimate', 'log_bins', 'abs_return_pdf',
           'power_spectrum', 'hill_tail_exponent', 'ks_distance', 'ks_two_sample',
           'loglog_slope', 'PDF_RANGE', 'PDF_BINS', 'WINDOW_LEN']

logger = logging.getLogger(__name__)

PDF_RANGE = (1e-2, 1e3)
PDF_BINS = 50
WINDOW_LEN = 1 << 14


def log_bins(lo=PDF_RANGE[0], hi=PDF_RANGE[1], n=PDF_BINS):
    """get n+1 log-spaced bin edges from lo to hi"""
    if not (0 < lo < hi) or int(n) != n or n < 1:
        raise EstimationError('need 0 < lo < hi and n >= 1, got (%r, %r, %r)' % (lo, hi, n),
                              'log_bins', module='stats')
    return np.logspace(np.log10(lo), np.log10(hi), int(n) + 1)


def _as_list(series_list):
    if series_list is None:
        return []
    if hasattr(series_list, 'values') and hasattr(series_list, 'window_T'):
        return [series_list]
    return list(series_list)


def _common_window(series_list, operation):
    windows = set(s.window_T for s in series_list)
    if len(windows) > 1:
        raise EstimationError('series have different windows: %s' % sorted(windows),
                              operation, module='stats')
    return windows.pop()


class DensityEstimate(object):
    """log-binned density of absolute returns

    bin_edges = the log-spaced edges
    counts = number of samples in each bin
    n_samples = number of samples, including those outside the bins
    n_realizations = number of series pooled
    window_T = the return window, in minutes
    """

    def __init__(self, bin_edges, counts, n_samples, n_realizations=1,
                 window_T=None, meta=None):
        self.bin_edges = np.asarray(bin_edges, dtype=float)
        self.counts = np.asarray(counts, dtype=np.int64)
        self.n_samples = int(n_samples)
        self.n_realizations = int(n_realizations)
        self.window_T = window_T
        self.meta = {} if meta is None else dict(meta)
        return

    def __repr__(self):
        return "%s(T=%s, bins=%s, n_samples=%s)" % (self.__class__.__name__,
               self.window_T, len(self.counts), self.n_samples)

    @property
    def widths(self):
        return np.diff(self.bin_edges)

    @property
    def bin_centers(self):
        """geometric centers of the bins"""
        return np.sqrt(self.bin_edges[:-1] * self.bin_edges[1:])

    @property
    def density(self):
        """count / (n_samples * bin width)"""
        if not self.n_samples:
            return np.zeros(len(self.counts))
        return self.counts / (self.n_samples * self.widths)

    def merge(self, other):
        """pool the samples of two estimates with the same bins"""
        if not np.array_equal(self.bin_edges, other.bin_edges):
            raise EstimationError('cannot merge densities with different bins',
                                  'DensityEstimate.merge', module='stats')
        if self.window_T != other.window_T:
            raise EstimationError('cannot merge densities for windows %s and %s'
                                  % (self.window_T, other.window_T),
                                  'DensityEstimate.merge', module='stats')
        return self.__class__(self.bin_edges, self.counts + other.counts,
                              self.n_samples + other.n_samples,
                              self.n_realizations + other.n_realizations,
                              self.window_T, self.meta)

    def to_frame(self):
        """get a DataFrame with columns bin_center, density, count"""
        import pandas
        return pandas.DataFrame({'bin_center': self.bin_centers, 'density': self.density,
                                 'count': self.counts},
                                columns=['bin_center', 'density', 'count'])

    def metadata(self):
        return {'kind': 'DensityEstimate', 'window_T': self.window_T,
                'bin_edges': self.bin_edges.tolist(), 'n_samples': self.n_samples,
                'n_realizations': self.n_realizations, 'meta': self.meta}


class SpectrumEstimate(object):
    """power spectral density of absolute returns

    freqs = frequencies, in cycles per minute
    power = spectral density, averaged with equal weight per series
    n_windows = number of windows averaged, over all series
    n_realizations = number of series averaged
    """

    def __init__(self, freqs, power_sum, n_windows, n_realizations=1,
                 window_T=None, window_len=None, meta=None):
        self.freqs = np.asarray(freqs, dtype=float)
        self.power_sum = np.asarray(power_sum, dtype=float)
        self.n_windows = int(n_windows)
        self.n_realizations = int(n_realizations)
        self.window_T = window_T
        self.window_len = window_len
        self.meta = {} if meta is None else dict(meta)
        return

    def __repr__(self):
        return "%s(T=%s, freqs=%s, n_realizations=%s)" % (self.__class__.__name__,
               self.window_T, len(self.freqs), self.n_realizations)

    @property
    def power(self):
        return self.power_sum / self.n_realizations

    def merge(self, other):
        """average two estimates on the same frequency grid"""
        if self.window_T != other.window_T or not np.array_equal(self.freqs, other.freqs):
            raise EstimationError('cannot merge spectra on different frequency grids',
                                  'SpectrumEstimate.merge', module='stats')
        return self.__class__(self.freqs, self.power_sum + other.power_sum,
                              self.n_windows + other.n_windows,
                              self.n_realizations + other.n_realizations,
                              self.window_T, self.window_len, self.meta)

    def smooth(self, bins_per_decade=10):
        """average the spectrum in log-spaced frequency bins

        Empty bins are dropped; each kept point sits at the geometric mean of
        the frequencies it averages.
        """
        if not bins_per_decade > 0:
            raise EstimationError('bins_per_decade must be positive',
                                  'SpectrumEstimate.smooth', module='stats')
        logf = np.log10(self.freqs)
        ids = np.floor((logf - logf[0]) * bins_per_decade + 1e-9).astype(int)
        counts = np.bincount(ids)
        keep = counts > 0
        f = 10 ** (np.bincount(ids, weights=logf)[keep] / counts[keep])
        p = np.bincount(ids, weights=self.power_sum)[keep] / counts[keep]
        meta = dict(self.meta, bins_per_decade=bins_per_decade)
        return self.__class__(f, p, self.n_windows, self.n_realizations,
                              self.window_T, self.window_len, meta)

    def to_frame(self):
        """get a DataFrame with columns freq_per_min, power"""
        import pandas
        return pandas.DataFrame({'freq_per_min': self.freqs, 'power': self.power},
                                columns=['freq_per_min', 'power'])

    def metadata(self):
        return {'kind': 'SpectrumEstimate', 'window_T': self.window_T,
                'window_len': self.window_len, 'n_windows': self.n_windows,
                'n_realizations': self.n_realizations, 'meta': self.meta}


def _resolve_bins(bins):
    if bins is None:
        return log_bins()
    if isinstance(bins, dict):
        return log_bins(bins.get('lo', PDF_RANGE[0]), bins.get('hi', PDF_RANGE[1]),
                        bins.get('n', PDF_BINS))
    edges = np.asarray(bins, dtype=float)
    if edges.ndim != 1 or len(edges) < 2 or not edges[0] > 0 or np.any(np.diff(edges) <= 0):
        raise EstimationError('bin edges must be positive and increasing',
                              'abs_return_pdf', module='stats')
    return edges


def abs_return_pdf(series_list, bins=None):
    """estimate the density of |r|, pooling the samples of all series

    series_list: a ReturnSeries, or a sequence of them with a common window
    bins: bin edges, a dict {lo, hi, n}, or None for 50 log bins over [1e-2, 1e3]

    Samples outside the bins (zero returns included) are counted in
    n_samples, so the density integrates to the fraction of samples binned.
    """
    series_list = _as_list(series_list)
    if not series_list:
        raise EstimationError('no series given', 'abs_return_pdf', module='stats')
    window = _common_window(series_list, 'abs_return_pdf')
    edges = _resolve_bins(bins)
    counts = np.zeros(len(edges) - 1, dtype=np.int64)
    n = 0
    for s in series_list:
        x = np.abs(s.values)
        # the last bin is closed, as in numpy.histogram
        counts += np.histogram(x, bins=edges)[0]
        n += len(x)
    if not n:
        raise EstimationError('no samples given', 'abs_return_pdf', module='stats')
    return DensityEstimate(edges, counts, n, len(series_list), window)


def _periodogram(x, window_len, detrend):
    n = len(x) // window_len
    windows = x[:n * window_len].reshape(n, window_len)
    if detrend:
        windows = windows - windows.mean(axis=1, keepdims=True)
    X = np.fft.rfft(windows, axis=1)[:, 1:window_len // 2 + 1]
    return (np.abs(X) ** 2 / window_len).mean(axis=0), n


def power_spectrum(series_list, window_len=WINDOW_LEN, detrend=True):
    """estimate the power spectral density of |r|

    series_list: a ReturnSeries, or a sequence of them with a common window
    window_len: length of the non-overlapping windows, a power of two
    detrend: remove the mean of |r| in each window

    The periodogram |X_k|**2/window_len is averaged over the windows of each
    series, then over the series; k = 1..window_len/2 and the frequency of k
    is k/(window_len T) cycles per minute.  For white noise the mean power
    equals the variance.
    """
    series_list = _as_list(series_list)
    if not series_list:
        raise EstimationError('no series given', 'power_spectrum', module='stats')
    L = int(window_len)
    if L != window_len or L < 2 or L & (L - 1):
        raise EstimationError('window_len must be a power of two >= 2, got %r' % window_len,
                              'power_spectrum', module='stats')
    window = _common_window(series_list, 'power_spectrum')
    freqs = np.arange(1, L // 2 + 1) / float(L * window)
    total = np.zeros(L // 2)
    n_windows = 0
    for s in series_list:
        if len(s) < L:
            raise EstimationError('series of length %d is shorter than one window of %d'
                                  % (len(s), L), 'power_spectrum', module='stats',
                                  symbol=s.symbol)
        power, n = _periodogram(np.abs(s.values), L, detrend)
        total += power
        n_windows += n
    logger.debug('spectrum T=%s: %d series, %d windows', window, len(series_list), n_windows)
    return SpectrumEstimate(freqs, total, n_windows, len(series_list), window, L)


def hill_tail_exponent(series, top_fraction=0.01):
    """estimate the tail exponent of the density of |r| (Hill alpha + 1)

    series: a ReturnSeries or a sequence of returns
    top_fraction: fraction of the largest |r| used; at least 100 samples
    """
    x = np.abs(np.asarray(getattr(series, 'values', series), dtype=float))
    k = int(top_fraction * len(x))
    if k < 100:
        raise EstimationError('need at least 100 tail samples, got %d' % k,
                              'hill_tail_exponent', module='stats')
    top = -np.partition(-x, k)[:k + 1]
    top.sort()
    threshold = top[0]
    if not threshold > 0:
        raise EstimationError('the tail threshold is zero', 'hill_tail_exponent', module='stats')
    alpha = k / np.sum(np.log(top[1:] / threshold))
    return float(alpha + 1.0)


def ks_distance(samples, reference_cdf):
    """sup-norm distance between the empirical CDF of samples and reference_cdf"""
    samples = np.asarray(samples, dtype=float).ravel()
    if not len(samples):
        raise EstimationError('no samples given', 'ks_distance', module='stats')
    return float(_stats.kstest(samples, reference_cdf).statistic)


def ks_two_sample(a, b):
    """sup-norm distance between the empirical CDFs of two samples"""
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if not len(a) or not len(b):
        raise EstimationError('no samples given', 'ks_two_sample', module='stats')
    return float(_stats.ks_2samp(a, b).statistic)


def loglog_slope(x, y, lo=None, hi=None):
    """least-squares slope of log10(y) against log10(x) for lo <= x <= hi"""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    mask = (x > 0) & (y > 0) & np.isfinite(y)
    if lo is not None: mask &= x >= lo
    if hi is not None: mask &= x <= hi
    if mask.sum() < 2:
        raise EstimationError('need at least 2 positive points in [%r, %r]' % (lo, hi),
                              'loglog_slope', module='stats')
    return float(np.polyfit(np.log10(x[mask]), np.log10(y[mask]), 1)[0])


# EOF
