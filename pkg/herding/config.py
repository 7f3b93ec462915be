#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
run configuration: defaults, named presets, and YAML config files

A config file has the sections ``model``, ``noise``, ``seasonality``,
``run``, ``stats`` and ``ingest``, plus an optional top-level ``preset``.
Values are layered as: built-in defaults, then the preset, then the file,
then any explicit overrides (the command line).  For example::

    preset: seasonal
    run:
      realizations: 8
      windows: [1, 3, 10, 30]
    stats:
      fit: {pdf: [2.0, 20.0], psd_high: [2.0e-2, 2.0e-1]}
"""
import os
import copy
import logging

import yaml

from .errors import ParameterError
from .model import ModelParams, BURN_IN
from .noise import NoiseSpec, SeasonalityProfile
from .ingest import TickFormat, SessionCalendar
from .stats import PDF_RANGE, PDF_BINS, WINDOW_LEN

__all__ = ['RunConfig', 'PRESETS', 'DEFAULTS', 'load_config', 'output_root']

logger = logging.getLogger(__name__)

OUTPUT_ENV = 'HERDING_OUTPUT'

DEFAULTS = {
    'model': ModelParams().as_dict(),
    'noise': {'kind': 'qgaussian', 'lam': None, 'T': 1.0},
    'seasonality': {'mode': 'constant', 'b': None, 'w': 20.0, 'base': 0.5,
                    'peak_offset': 195.0, 'session_length': 390},
    'run': {'realizations': 4, 'duration': 1 << 19, 'burn_in': BURN_IN,
            'windows': [1, 3, 10, 30], 'seed': 0, 'jobs': None, 'output_dir': None},
    'stats': {'pdf_bins': {'lo': PDF_RANGE[0], 'hi': PDF_RANGE[1], 'n': PDF_BINS},
              'window_len': WINDOW_LEN, 'bins_per_decade': 10,
              'fit': {'pdf': [3.0, 30.0], 'psd_low': [1e-4, 1e-3],
                      'psd_high': [1e-2, 1e-1]}},
    'ingest': {'columns': {'timestamp': 'timestamp', 'price': 'price', 'symbol': 'symbol'},
               'delimiter': None, 'timestamp': 'iso', 'max_error_rate': 0.001,
               'default_symbol': None,
               'calendar': {'session_open': 570, 'session_length': 390,
                            'days': None, 'utc_offset': 0},
               'calendars': {}},
}

PRESETS = {
    'qgaussian': {},
    'gaussian': {'noise': {'kind': 'gaussian'}},
    'seasonal': {'seasonality': {'mode': 'bump'}},
}


def output_root():
    """get the default output directory, from $HERDING_OUTPUT if set"""
    return os.environ.get(OUTPUT_ENV) or 'herding_output'


def _merge(base, changes, where=''):
    """update nested dict base with changes, rejecting unknown keys"""
    for (key, value) in changes.items():
        if key not in base:
            raise ParameterError('unknown config entry %r' % (where + str(key)),
                                 'load_config', module='config')
        # free-form mappings are replaced, not merged
        if isinstance(base[key], dict) and isinstance(value, dict) and key != 'calendars':
            _merge(base[key], value, where + str(key) + '.')
        else:
            base[key] = value
    return base


class RunConfig(object):
    """everything needed to run a campaign or an ingest

    model = ModelParams
    noise = NoiseSpec
    seasonality = SeasonalityProfile
    realizations = number of paths
    duration = recorded minutes per path
    burn_in = discarded minutes per path
    windows = aggregation windows T, in minutes
    seed = base seed; realization i uses seed + i
    jobs = worker processes [default: all processors]
    output_dir = directory for the artifacts
    stats = estimator settings (pdf_bins, window_len, bins_per_decade, fit)
    ingest = tick format and session calendar settings
    """

    def __init__(self, tree=None, preset=None):
        self.preset = preset or 'qgaussian'
        if self.preset not in PRESETS:
            raise ParameterError('unknown preset %r, choose from %s' % (self.preset, sorted(PRESETS)),
                                 'RunConfig', module='config')
        merged = copy.deepcopy(DEFAULTS)
        _merge(merged, copy.deepcopy(PRESETS[self.preset]))
        if tree:
            _merge(merged, tree)
        self.tree = merged
        self._build()
        self.validate()
        return

    def _build(self):
        tree = self.tree
        try:
            self.model = ModelParams(**tree['model'])
            noise = dict(tree['noise'])
            if noise.get('lam') is None:
                noise['lam'] = self.model.lam
            self.noise = NoiseSpec(**noise)
            season = dict(tree['seasonality'])
            if season.get('b') is None:
                season['b'] = self.model.b
            self.seasonality = SeasonalityProfile(**season)
            ingest = tree['ingest']
            self.format = TickFormat(time_format=ingest['timestamp'],
                                     delimiter=ingest['delimiter'],
                                     max_error_rate=ingest['max_error_rate'],
                                     default_symbol=ingest['default_symbol'],
                                     **ingest['columns'])
            self.calendar = SessionCalendar(**ingest['calendar'])
        except TypeError as error:
            raise ParameterError('bad config entry: %s' % error, 'RunConfig', module='config')
        run = tree['run']
        self.realizations = run['realizations']
        self.duration = run['duration']
        self.burn_in = run['burn_in']
        self.windows = sorted(set(int(w) for w in run['windows']))
        self.seed = run['seed']
        self.jobs = run['jobs']
        self.output_dir = run['output_dir'] or output_root()
        self.stats = tree['stats']
        return

    def validate(self):
        """raise a ParameterError if the run settings are inconsistent"""
        bad = []
        if not (isinstance(self.realizations, int) and self.realizations >= 1):
            bad.append('realizations >= 1')
        if not (isinstance(self.duration, int) and self.duration >= 1):
            bad.append('duration >= 1')
        if not (isinstance(self.burn_in, int) and self.burn_in >= 0):
            bad.append('burn_in >= 0')
        if not self.windows or min(self.windows) < 1:
            bad.append('windows >= 1')
        if self.jobs is not None and not (isinstance(self.jobs, int) and self.jobs >= 1):
            bad.append('jobs >= 1')
        if self.seed is not None and not isinstance(self.seed, int):
            bad.append('integer seed')
        window_len = self.stats['window_len']
        if self.windows and isinstance(self.duration, int) and \
           self.duration < max(self.windows) * window_len:
            bad.append('duration >= max(windows) * window_len = %d' % (max(self.windows) * window_len))
        if bad:
            raise ParameterError('invalid run configuration, require: %s' % ', '.join(bad),
                                 'RunConfig', module='config')
        return

    def calendar_for(self, filename):
        """get the session calendar for an input file"""
        special = self.tree['ingest']['calendars'].get(os.path.basename(str(filename)))
        if special is None:
            return self.calendar
        return SessionCalendar(**dict(self.tree['ingest']['calendar'], **special))

    def replace(self, **changes):
        """get a copy with run settings (or whole sections) replaced

        Keys that name a section (model, noise, ...) take a dict of entries;
        any other key is a ``run`` entry.
        """
        tree = copy.deepcopy(self.tree)
        update = {}
        for (key, value) in changes.items():
            if value is None:
                continue
            if key in DEFAULTS:
                update.setdefault(key, {}).update(value)
            else:
                update.setdefault('run', {})[key] = value
        _merge(tree, update)
        new = self.__class__.__new__(self.__class__)
        new.preset = self.preset
        new.tree = tree
        new._build()
        new.validate()
        return new

    def as_dict(self):
        """get the full configuration as a json-friendly dict"""
        tree = copy.deepcopy(self.tree)
        tree['preset'] = self.preset
        tree['run']['output_dir'] = None
        return tree

    def __repr__(self):
        return "%s(preset=%r, realizations=%s, duration=%s, windows=%s)" % \
               (self.__class__.__name__, self.preset, self.realizations,
                self.duration, self.windows)


def load_config(path=None, preset=None):
    """build a RunConfig from an optional YAML file and preset name

    A preset given here overrides the one named in the file.
    """
    tree = {}
    if path is not None:
        with open(path) as f:
            try:
                tree = yaml.safe_load(f) or {}
            except yaml.YAMLError as error:
                raise ParameterError('cannot parse %s: %s' % (path, error),
                                     'load_config', module='config', path=str(path))
        if not isinstance(tree, dict):
            raise ParameterError('%s must hold a mapping of sections' % path,
                                 'load_config', module='config', path=str(path))
        logger.debug('read config %s', path)
    tree = dict(tree)
    named = tree.pop('preset', None)
    return RunConfig(tree, preset or named)


# EOF
