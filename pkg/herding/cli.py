#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
command-line front end

Usage::

    herding simulate [--config PATH] [--preset NAME] [--seed N]
                     [--realizations N] [--jobs N] [--out DIR] [--windows 1,3,10,30]
    herding ingest FILE [FILE ...] [--config PATH] [--out DIR] [--windows ...]
    herding compare MODEL_DIR EMPIRICAL_DIR [--windows ...] [--out DIR]

``simulate`` writes, under the output directory, one ``path_<i>`` table
per realization, ``returns_T<T>_<i>`` tables, the pooled ``pdf_T<T>`` and
``psd_T<T>`` estimates, a ``fits`` table of log-log slopes, and
``manifest.json``.  Fatal errors print a json report on stderr and exit
with status 1.
"""
import os
import sys
import json
import logging
import argparse
from multiprocessing import Pool

import numpy as np
import pandas

from .archives import dir_archive
from .config import load_config
from .errors import HerdingError, ComparisonError, EstimationError, IngestError
from .ingest import parse_ticks, minute_returns, pool_by_group
from .model import simulate_path
from .series import build_returns, normalize_unit_variance, aggregate
from .stats import abs_return_pdf, power_spectrum, loglog_slope
from .tools import cpu_count

__all__ = ['main', 'cmd_simulate', 'cmd_ingest', 'cmd_compare']

logger = logging.getLogger(__name__)


def _estimates(series, config):
    """get {T: (series, pdf, psd)} for a normalized one-minute series"""
    out = {}
    for T in config.windows:
        agg = aggregate(series, T)
        out[T] = (agg, abs_return_pdf(agg, config.stats['pdf_bins']),
                  power_spectrum(agg, config.stats['window_len']))
    return out


def _realization(args):
    """simulate one path and its estimates; runs in a worker"""
    config, index = args
    seed = None if config.seed is None else config.seed + index
    path = simulate_path(config.model, config.duration, config.burn_in, seed=seed)
    series = build_returns(path, config.noise, config.model.a, config.seasonality, seed=seed)
    return index, path, _estimates(normalize_unit_variance(series), config)


def _fits(pdfs, psds, config):
    """log-log slopes over the fit ranges of the config"""
    fit = config.stats['fit']
    rows = []
    for T in sorted(pdfs):
        row = {'window_T': T}
        for (name, x, y, bounds) in (
                ('pdf_slope', pdfs[T].bin_centers, pdfs[T].density, fit.get('pdf')),
                ('psd_low_slope', psds[T].freqs, psds[T].power, fit.get('psd_low')),
                ('psd_high_slope', psds[T].freqs, psds[T].power, fit.get('psd_high'))):
            try:
                row[name] = loglog_slope(x, y, *bounds) if bounds else np.nan
            except EstimationError as error:
                logger.warning('no %s for T=%s: %s', name, T, error.message)
                row[name] = np.nan
        rows.append(row)
    return pandas.DataFrame(rows, columns=['window_T', 'pdf_slope', 'psd_low_slope', 'psd_high_slope'])


def _pooled(pdfs, psds, archive, config, **meta):
    for T in sorted(pdfs):
        pdfs[T].meta.update(meta)
        psds[T].meta.update(meta)
        archive['pdf_T%d' % T] = pdfs[T]
        archive['psd_T%d' % T] = psds[T].smooth(config.stats['bins_per_decade'])
    return


def _finish(archive, config, previous, **extra):
    """write the manifest, and warn about files that changed since the last run"""
    from . import __version__
    manifest = archive.write_manifest(json.loads(json.dumps(config.as_dict())),
                                      version=__version__, **extra)
    if previous is not None and previous.get('config') == manifest['config']:
        old = previous.get('files', {})
        changed = sorted(f for f in manifest['files'] if f in old and old[f] != manifest['files'][f])
        for name in changed:
            logger.warning('%s differs from the previous run with the same config', name)
        if not changed:
            logger.info('all files match the previous manifest')
    return manifest


def cmd_simulate(config, archive=None):
    """run the simulation campaign described by a RunConfig

    Realizations run in a pool of config.jobs processes; the estimates are
    merged and all files are written from this process.  Returns the archive.
    """
    if archive is None:
        archive = dir_archive(config.output_dir)
    previous = archive.read_manifest() if hasattr(archive, 'read_manifest') else None
    jobs = min(config.jobs or cpu_count(), config.realizations)
    tasks = [(config, i) for i in range(config.realizations)]
    logger.info('simulating %d realizations of %d minutes with %d jobs',
                config.realizations, config.duration, jobs)
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            results = pool.map(_realization, tasks)
    else:
        results = [_realization(task) for task in tasks]
    pdfs, psds = {}, {}
    for (index, path, estimates) in results:
        archive['path_%d' % index] = path
        for T in sorted(estimates):
            series, pdf, psd = estimates[T]
            archive['returns_T%d_%d' % (T, index)] = series
            pdfs[T] = pdf if T not in pdfs else pdfs[T].merge(pdf)
            psds[T] = psd if T not in psds else psds[T].merge(psd)
        logger.info('realization %d of %d written', index + 1, config.realizations)
    seeds = [None if config.seed is None else config.seed + i for i in range(config.realizations)]
    _pooled(pdfs, psds, archive, config, source='model', seeds=seeds,
            params_hash=config.model.hash)
    archive['fits'] = _fits(pdfs, psds, config)
    if hasattr(archive, 'write_manifest'):
        _finish(archive, config, previous, command='simulate')
    return archive


def cmd_ingest(files, config, archive=None):
    """build normalized minute returns and their estimates from tick files

    Each symbol is one realization; all symbols must share one session
    calendar.  Returns the archive.
    """
    if not files:
        raise IngestError('no input files given', 'cmd_ingest', module='cli')
    if archive is None:
        archive = dir_archive(config.output_dir)
    previous = archive.read_manifest() if hasattr(archive, 'read_manifest') else None
    everything, rows, seen = [], [], {}
    for name in files:
        ticks = parse_ticks(name, config.format)
        for series in minute_returns(ticks, config.calendar_for(name)):
            if series.symbol in seen:
                raise IngestError('symbol %r appears in %s and %s' % (series.symbol, seen[series.symbol], name),
                                  'cmd_ingest', module='cli', path=str(name))
            seen[series.symbol] = name
            everything.append(series)
            rows.append({'symbol': series.symbol, 'file': os.path.basename(str(name)),
                         'trades': sum(1 for t in ticks if t.symbol == series.symbol),
                         'file_rejected_rows': len(ticks.errors), 'returns': len(series),
                         'sessions': series.meta['sessions'],
                         'zero_fraction': series.meta['zero_fraction']})
        logger.info('ingested %s: %d trades, %d rejected rows', name, len(ticks), len(ticks.errors))
    group = pool_by_group(everything, name='empirical')
    pdfs, psds = {}, {}
    for series in group:
        normalized = normalize_unit_variance(series)
        archive['returns_%s' % _safe(series.symbol)] = normalized
        for (T, (agg, pdf, psd)) in _estimates(normalized, config).items():
            pdfs[T] = pdf if T not in pdfs else pdfs[T].merge(pdf)
            psds[T] = psd if T not in psds else psds[T].merge(psd)
    _pooled(pdfs, psds, archive, config, source='empirical', symbols=group.symbols)
    archive['summary'] = pandas.DataFrame(rows, columns=['symbol', 'file', 'trades', 'file_rejected_rows',
                                                         'returns', 'sessions', 'zero_fraction'])
    archive['fits'] = _fits(pdfs, psds, config)
    if hasattr(archive, 'write_manifest'):
        _finish(archive, config, previous, command='ingest',
                inputs=[os.path.basename(str(f)) for f in files])
    return archive


def _safe(symbol):
    return ''.join(c if c.isalnum() or c in '-.' else '_' for c in str(symbol))


def _open_side(side, label):
    if isinstance(side, (str, os.PathLike)):
        if not os.path.isdir(side):
            raise ComparisonError('%s artifacts not found at %s' % (label, side), 'cmd_compare')
        return dir_archive(side)
    return side


def _windows(archive):
    return sorted(int(k[len('pdf_T'):]) for k in archive.keys() if k.startswith('pdf_T'))


def _compare_pdf(model, empirical):
    m = model.frame.set_index('bin_center')['density']
    e = empirical.frame.set_index('bin_center')['density']
    keys = [x for x in m.index if np.any(np.isclose(e.index, x, rtol=1e-9, atol=0))]
    pairs = [(m[x], e.iloc[int(np.argmin(np.abs(e.index - x)))]) for x in keys]
    table = pandas.DataFrame({'bin_center': keys, 'model_density': [p[0] for p in pairs],
                              'empirical_density': [p[1] for p in pairs]},
                             columns=['bin_center', 'model_density', 'empirical_density'])
    both = (table['model_density'] > 0) & (table['empirical_density'] > 0)
    if not both.any():
        return table, 0, None
    diff = np.log10(table['model_density'][both]) - np.log10(table['empirical_density'][both])
    return table, int(both.sum()), float(np.sqrt(np.mean(diff ** 2)))


def _compare_psd(model, empirical):
    m, e = model.frame, empirical.frame
    m = m[(m['power'] > 0) & (m['freq_per_min'] > 0)]
    e = e[(e['power'] > 0) & (e['freq_per_min'] > 0)]
    if not len(m) or not len(e):
        return None, 0, None, None
    lf, lp = np.log10(m['freq_per_min'].to_numpy()), np.log10(m['power'].to_numpy())
    ef, ep = np.log10(e['freq_per_min'].to_numpy()), np.log10(e['power'].to_numpy())
    inside = (lf >= ef[0] - 1e-12) & (lf <= ef[-1] + 1e-12)
    if not inside.any():
        return None, 0, None, None
    lf, lp = lf[inside], lp[inside]
    eq = np.interp(lf, ef, ep)
    offset = float(np.mean(lp - eq))
    rmse = float(np.sqrt(np.mean((lp - eq - offset) ** 2)))
    table = pandas.DataFrame({'freq_per_min': 10 ** lf, 'model_power': 10 ** lp,
                              'empirical_power': 10 ** eq,
                              'empirical_aligned': 10 ** (eq + offset)},
                             columns=['freq_per_min', 'model_power', 'empirical_power',
                                      'empirical_aligned'])
    return table, len(lf), offset, rmse


def cmd_compare(model, empirical, windows=None, out=None):
    """compare model and empirical estimates window by window

    model, empirical: artifact directories (or archives) holding pdf_T<T>
        and psd_T<T>
    windows: the windows to compare [default: every window of the model]
    out: directory (or archive) for the paired tables and the summary

    The PDFs are compared by the RMSE of log10 density over bins where both
    are positive; the PSDs by the RMSE of log10 power after removing the
    mean log offset.  A window without overlapping bins is flagged with
    no_overlap instead of a value.  Returns the summary DataFrame.
    """
    model = _open_side(model, 'model')
    empirical = _open_side(empirical, 'empirical')
    if windows is None:
        windows = _windows(model)
        if not windows:
            raise ComparisonError('no pdf_T<T> estimates in the model artifacts', 'cmd_compare')
    rows, tables = [], {}
    for T in windows:
        for (label, side) in (('model', model), ('empirical', empirical)):
            for kind in ('pdf', 'psd'):
                if '%s_T%d' % (kind, T) not in side:
                    raise ComparisonError('the %s artifacts have no %s_T%d' % (label, kind, T),
                                          'cmd_compare', window_T=T)
        pdf_table, n_bins, pdf_rmse = _compare_pdf(model['pdf_T%d' % T], empirical['pdf_T%d' % T])
        psd_table, n_freqs, offset, psd_rmse = _compare_psd(model['psd_T%d' % T], empirical['psd_T%d' % T])
        if not n_bins:
            logger.warning('T=%d: no overlapping pdf bins', T)
        tables['pdf_T%d' % T] = pdf_table
        if psd_table is not None:
            tables['psd_T%d' % T] = psd_table
        rows.append({'window_T': T, 'pdf_bins': n_bins, 'pdf_log_rmse': pdf_rmse,
                     'psd_points': n_freqs, 'psd_log_offset': offset, 'psd_log_rmse': psd_rmse,
                     'no_overlap': not n_bins or not n_freqs})
    summary = pandas.DataFrame(rows, columns=['window_T', 'pdf_bins', 'pdf_log_rmse', 'psd_points',
                                              'psd_log_offset', 'psd_log_rmse', 'no_overlap'])
    if out is not None:
        target = dir_archive(out) if isinstance(out, (str, os.PathLike)) else out
        for (key, table) in tables.items():
            target[key] = table
        target['summary'] = summary
        if hasattr(target, 'write_manifest'):
            target.write_manifest(None, command='compare')
    return summary


def _windows_arg(text):
    try:
        windows = [int(w) for w in text.split(',') if w.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('windows must be integers separated by commas')
    if not windows:
        raise argparse.ArgumentTypeError('no windows given')
    return windows


def _parser():
    parser = argparse.ArgumentParser(prog='herding', description=
             'simulate the three-state herding model and compare return statistics')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='YAML config file')
    common.add_argument('--preset', help='named preset: qgaussian, gaussian, seasonal')
    common.add_argument('--out', help='output directory [default: $HERDING_OUTPUT]')
    common.add_argument('--windows', type=_windows_arg, help='aggregation windows, e.g. 1,3,10,30')
    common.add_argument('-v', '--verbose', action='count', default=0, help='more logging')
    common.add_argument('-q', '--quiet', action='count', default=0, help='less logging')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    sim = commands.add_parser('simulate', parents=[common], help='run a simulation campaign')
    sim.add_argument('--seed', type=int, help='base seed')
    sim.add_argument('--realizations', type=int, help='number of paths')
    sim.add_argument('--jobs', type=int, help='worker processes [default: all processors]')
    sim.add_argument('--duration', type=int, help='recorded minutes per path')
    sim.add_argument('--burn-in', type=int, dest='burn_in', help='discarded minutes per path')
    ing = commands.add_parser('ingest', parents=[common], help='ingest tick files')
    ing.add_argument('files', nargs='+', help='delimited tick files')
    cmp = commands.add_parser('compare', parents=[common], help='compare model and empirical artifacts')
    cmp.add_argument('model', help='directory of model artifacts')
    cmp.add_argument('empirical', help='directory of empirical artifacts')
    return parser


def _configure_logging(verbose, quiet):
    level = max(logging.DEBUG, min(logging.CRITICAL, logging.WARNING + 10 * (quiet - verbose)))
    logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    logging.captureWarnings(True)
    return


def main(argv=None):
    """run the command line; returns the exit status"""
    args = _parser().parse_args(argv)
    _configure_logging(args.verbose, args.quiet)
    try:
        if args.command == 'compare':
            cmd_compare(args.model, args.empirical, args.windows, args.out)
            return 0
        config = load_config(args.config, args.preset)
        changes = {'output_dir': args.out, 'windows': args.windows}
        if args.command == 'simulate':
            changes.update(seed=args.seed, realizations=args.realizations, jobs=args.jobs,
                           duration=args.duration, burn_in=args.burn_in)
            cmd_simulate(config.replace(**changes))
        else:
            cmd_ingest(args.files, config.replace(**changes))
        return 0
    except HerdingError as error:
        sys.stderr.write(json.dumps(error.as_report(), sort_keys=True) + '\n')
        return 1
    except Exception as error:
        logger.critical('unexpected %s: %s', error.__class__.__name__, error, exc_info=True)
        return 2


if __name__ == '__main__':
    sys.exit(main())


# EOF
