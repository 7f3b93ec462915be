#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution

import os

from herding.config import *
from herding.errors import ParameterError
from herding.model import ModelParams
from herding.noise import NoiseSpec, SeasonalityProfile


def _write(name, text):
    with open(name, 'w') as f:
        f.write(text)
    return name


def test_defaults():
    config = RunConfig()
    assert config.preset == 'qgaussian'
    assert config.model == ModelParams()
    assert config.noise == NoiseSpec('qgaussian', 4.0, 1.0)
    assert config.seasonality == SeasonalityProfile.constant(1.0)
    assert config.windows == [1, 3, 10, 30]
    assert config.seed == 0 and config.realizations == 4
    assert config.as_dict()['run']['output_dir'] is None
    assert config.as_dict()['preset'] == 'qgaussian'
    # the low-frequency fit covers a full decade of the one-minute spectrum
    lo, hi = config.stats['fit']['psd_low']
    assert lo >= 1.0 / config.stats['window_len'] and abs(hi / lo - 10) < 1e-9


def test_presets():
    assert RunConfig(preset='gaussian').noise.kind == 'gaussian'
    assert RunConfig(preset='seasonal').seasonality.mode == 'bump'
    assert sorted(PRESETS) == ['gaussian', 'qgaussian', 'seasonal']
    try:
        RunConfig(preset='daily')
        assert False
    except ParameterError:
        pass


def test_file():
    name = _write('herding_config.yaml', """
preset: gaussian
model: {a: 0.0, lam: 5}
run:
  realizations: 2
  windows: [30, 1, 30]
ingest:
  calendars:
    short.csv: {session_length: 300}
""")
    try:
        config = load_config(name)
        assert config.preset == 'gaussian' and config.noise.kind == 'gaussian'
        assert config.model.a == 0.0 and config.noise.lam == 5.0
        assert config.windows == [1, 30] and config.realizations == 2
        assert config.calendar_for('/data/short.csv').session_length == 300
        assert config.calendar_for('long.csv').session_length == 390
        assert load_config(name, preset='seasonal').seasonality.mode == 'bump'
    finally:
        os.remove(name)


def test_bad_files():
    texts = ('model: {gamma: 1}\n', 'run: {duration: 100}\n', 'run: [1, 2\n',
             '- 1\n- 2\n', 'noise: {kind: levy}\n', 'run: {jobs: 0}\n')
    for text in texts:
        name = _write('herding_bad.yaml', text)
        try:
            load_config(name)
            assert False, text
        except ParameterError:
            pass
        finally:
            os.remove(name)


def test_replace():
    config = RunConfig()
    changed = config.replace(seed=5, realizations=None, model={'a': 0.1})
    assert changed.seed == 5 and changed.realizations == 4
    assert changed.model.a == 0.1 and config.model.a == 0.5
    try:
        config.replace(duration=10)
        assert False
    except ParameterError:
        pass


def test_output_root():
    saved = os.environ.pop('HERDING_OUTPUT', None)
    try:
        assert output_root() == 'herding_output'
        os.environ['HERDING_OUTPUT'] = 'elsewhere'
        assert RunConfig().output_dir == 'elsewhere'
        assert RunConfig({'run': {'output_dir': 'here'}}).output_dir == 'here'
    finally:
        os.environ.pop('HERDING_OUTPUT', None)
        if saved is not None:
            os.environ['HERDING_OUTPUT'] = saved


if __name__ == '__main__':
    test_defaults()
    test_presets()
    test_file()
    test_bad_files()
    test_replace()
    test_output_root()
