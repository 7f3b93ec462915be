#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
empirical trade data: parse ticks, build one-minute returns, pool symbols

Ticks are read from delimited text with a header row.  Each in-session
minute is priced by the last trade at or before the end of the minute,
minutes without trades carry the previous price forward (a zero return),
and no return is taken across the gap between sessions.
"""
import os
import itertools
import csv
import math
import logging
from collections import namedtuple, OrderedDict

import numpy as np
import pandas

from .errors import IngestError, ParameterError
from .series import ReturnSeries, EMPIRICAL

__all__ = ['TickRecord', 'TickFormat', 'SessionCalendar', 'TickList',
           'SeriesGroup', 'parse_ticks', 'minute_returns', 'pool_by_group']

logger = logging.getLogger(__name__)

ISO = 'iso'
EPOCH = 'epoch'
DELIMITERS = ',;\t'
_DAY = 86400.0

TickRecord = namedtuple('TickRecord', ['timestamp', 'price', 'symbol'])
TickRecord.__doc__ = """one trade: epoch seconds (UTC), positive price, and symbol"""


class TickFormat(namedtuple('TickFormat', ['timestamp', 'price', 'symbol', 'delimiter',
                            'time_format', 'max_error_rate', 'default_symbol'])):
    """layout of a tick file

    timestamp, price, symbol = column names, or zero-based column indices
    delimiter = field delimiter, or None to detect one of ',', ';', tab
    time_format = 'iso' (ISO-8601, naive times are UTC) or 'epoch' (seconds)
    max_error_rate = largest tolerated fraction of rejected rows
    default_symbol = symbol used when the symbol column is absent
    """
    __slots__ = ()

    def __new__(cls, timestamp='timestamp', price='price', symbol='symbol',
                delimiter=None, time_format=ISO, max_error_rate=0.001,
                default_symbol=None):
        if time_format not in (ISO, EPOCH):
            raise ParameterError("time_format must be 'iso' or 'epoch', got %r" % time_format,
                                 'TickFormat', module='ingest')
        if not 0 <= max_error_rate < 1:
            raise ParameterError('max_error_rate must be in [0, 1)', 'TickFormat', module='ingest')
        return super(TickFormat, cls).__new__(cls, timestamp, price, symbol, delimiter,
                                              time_format, float(max_error_rate), default_symbol)


class SessionCalendar(namedtuple('SessionCalendar',
                      ['session_open', 'session_length', 'days', 'utc_offset'])):
    """exchange sessions

    session_open = opening time, in minutes after midnight (exchange clock)
    session_length = minutes per session
    days = the trading dates (datetime.date or ISO strings), or None for
        every date present in the data
    utc_offset = minutes added to UTC to get the exchange clock
    """
    __slots__ = ()

    def __new__(cls, session_open=570, session_length=390, days=None, utc_offset=0):
        session_open, session_length = int(session_open), int(session_length)
        if session_length < 1 or not 0 <= session_open < 1440 \
           or session_open + session_length > 1440:
            raise ParameterError('sessions must lie within one day, got open=%r length=%r'
                                 % (session_open, session_length),
                                 'SessionCalendar', module='ingest')
        if days is not None:
            days = frozenset(pandas.Timestamp(d).date() for d in days)
        return super(SessionCalendar, cls).__new__(cls, session_open, session_length,
                                                   days, int(utc_offset))

    def as_dict(self):
        days = None if self.days is None else sorted(d.isoformat() for d in self.days)
        return {'session_open': self.session_open, 'session_length': self.session_length,
                'days': days, 'utc_offset': self.utc_offset}


class TickList(list):
    """the records parsed from one input, with the rejected rows

    errors = list of (line, reason)
    path = the input, if known
    """
    def __init__(self, records=(), errors=(), path=None):
        list.__init__(self, records)
        self.errors = list(errors)
        self.path = path


class SeriesGroup(list):
    """return series of several symbols, treated as realizations of one process"""
    def __init__(self, series=(), name=None):
        list.__init__(self, series)
        self.name = name

    @property
    def window_T(self):
        return self[0].window_T if len(self) else None

    @property
    def symbols(self):
        return [s.symbol for s in self]


def _column(header, key, path):
    if isinstance(key, int):
        if not 0 <= key < len(header):
            raise IngestError('column index %d is out of range for %d columns' % (key, len(header)),
                              'parse_ticks', line=1, path=path)
        return key
    try:
        return header.index(key)
    except ValueError:
        raise IngestError('column %r not found in header %r' % (key, header),
                          'parse_ticks', line=1, path=path)


def _open(input):
    if isinstance(input, (str, bytes, os.PathLike)):
        path = os.fspath(input)
        return open(path, newline=''), path, True
    return input, getattr(input, 'name', None), False


def parse_ticks(input, format=None, path=None):
    """read trades from delimited text

    input: a path, or a text stream
    format: TickFormat [default: columns timestamp, price, symbol]
    path: name of the input, for reporting

    Rows that cannot be parsed, or have a non-positive price, are rejected
    and kept as (line, reason) in the ``errors`` of the returned TickList.
    A bad header, timestamps that go back in time within a symbol, or more
    rejected rows than format.max_error_rate allows are fatal.
    """
    if format is None:
        format = TickFormat()
    stream, name, close = _open(input)
    path = name if path is None else path
    try:
        raw, errors, n_rows = _read_rows(stream, format, path)
    finally:
        if close: stream.close()
    if not raw and not errors:
        raise IngestError('no trades found', 'parse_ticks', path=path)
    lines = np.array([r[0] for r in raw], dtype=np.int64)
    stamps = pandas.Series([r[1] for r in raw], dtype=object)
    prices = pandas.to_numeric(pandas.Series([r[2] for r in raw], dtype=object), errors='coerce')
    if format.time_format == EPOCH:
        seconds = pandas.to_numeric(stamps, errors='coerce')
    else:
        parsed = pandas.to_datetime(stamps, errors='coerce', utc=True, format='ISO8601') \
                 if len(stamps) else pandas.Series([], dtype='datetime64[ns, UTC]')
        seconds = (parsed - pandas.Timestamp(0, tz='UTC')) / pandas.Timedelta(seconds=1)
    records = []
    last = {}
    for (line, ts, price, symbol) in zip(lines.tolist(), seconds.tolist(),
                                         prices.tolist(), (r[3] for r in raw)):
        if not math.isfinite(ts):
            errors.append((line, 'unparseable timestamp'))
        elif not math.isfinite(price):
            errors.append((line, 'unparseable price'))
        elif price <= 0:
            errors.append((line, 'non-positive price %r' % price))
        else:
            if ts < last.get(symbol, -math.inf):
                raise IngestError('timestamp goes back in time for symbol %r' % symbol,
                                  'parse_ticks', line=line, path=path, errors=errors)
            last[symbol] = ts
            records.append(TickRecord(ts, price, symbol))
    errors.sort()
    for (line, reason) in errors:
        logger.warning('%s:%s: rejected row, %s', path or '<stream>', line, reason)
    if n_rows and len(errors) > format.max_error_rate * n_rows:
        raise IngestError('%d of %d rows rejected, above the tolerated rate %g'
                          % (len(errors), n_rows, format.max_error_rate),
                          'parse_ticks', path=path, errors=errors)
    logger.debug('%s: %d trades, %d rejected rows', path or '<stream>', len(records), len(errors))
    return TickList(records, errors, path)


def _read_rows(stream, format, path):
    skipped = 0
    for first in stream:
        if first.strip():
            break
        skipped += 1
    else:
        raise IngestError('empty input', 'parse_ticks', path=path)
    delimiter = format.delimiter
    if delimiter is None:
        try:
            delimiter = csv.Sniffer().sniff(first.rstrip('\r\n'), delimiters=DELIMITERS).delimiter
        except csv.Error:
            delimiter = ','
    reader = csv.reader(itertools.chain([first], stream), delimiter=delimiter)
    try:
        header = [h.strip() for h in next(reader)]
    except (StopIteration, csv.Error) as error:
        raise IngestError('unreadable header: %s' % error, 'parse_ticks',
                          line=skipped + 1, path=path)
    it = _column(header, format.timestamp, path)
    ip = _column(header, format.price, path)
    try:
        isym = _column(header, format.symbol, path)
    except IngestError:
        if format.default_symbol is None:
            raise
        isym = None
    width = len(header)
    raw, errors, n_rows = [], [], 0
    while True:
        try:
            row = next(reader)
        except StopIteration:
            break
        except csv.Error as error:
            n_rows += 1
            errors.append((reader.line_num + skipped, 'malformed row: %s' % error))
            continue
        if not row or not any(field.strip() for field in row):
            continue
        n_rows += 1
        line = reader.line_num + skipped
        if len(row) != width:
            errors.append((line, 'expected %d fields, got %d' % (width, len(row))))
            continue
        symbol = format.default_symbol if isym is None else row[isym].strip()
        raw.append((line, row[it].strip(), row[ip].strip(), symbol))
    return raw, errors, n_rows


def _bars(frame, calendar):
    """last trade price of each (symbol, day, minute) in session"""
    clock = frame['timestamp'].to_numpy() + 60.0 * calendar.utc_offset
    day = np.floor(clock / _DAY)
    offset = clock - day * _DAY - 60.0 * calendar.session_open
    minute = np.maximum(np.ceil(offset / 60.0) - 1, 0)
    inside = (offset >= 0) & (offset <= 60.0 * calendar.session_length)
    if calendar.days is not None:
        dates = pandas.to_datetime(day * _DAY, unit='s').date
        inside &= np.array([d in calendar.days for d in dates], dtype=bool)
    bars = frame.assign(day=day.astype(np.int64), minute=minute.astype(np.int64))[inside]
    # trades are in time order within a symbol, so the last row of a minute wins
    return bars.groupby(['symbol', 'day', 'minute'], sort=False)['price'].last()


def minute_returns(ticks, calendar=None):
    """build one-minute log-returns for each symbol

    ticks: sequence of TickRecord, in time order within each symbol
    calendar: SessionCalendar [default: 09:30-16:00 UTC, every day]

    Returns a list of ReturnSeries, one per symbol in order of appearance;
    ``sessions`` holds the index of the first return of each session and
    ``meta['zero_fraction']`` the fraction of minutes without trades.
    """
    if calendar is None:
        calendar = SessionCalendar()
    frame = pandas.DataFrame(list(ticks), columns=list(TickRecord._fields))
    if not len(frame):
        raise IngestError('no trades given', 'minute_returns')
    order = list(OrderedDict.fromkeys(frame['symbol']))
    bars = _bars(frame, calendar)
    L = calendar.session_length
    out = []
    for symbol in order:
        values, starts = [], []
        priced = empty = days = 0
        if symbol in bars.index.get_level_values(0):
            for (day, minutes) in bars.loc[symbol].groupby(level=0, sort=True):
                prices = np.full(L, np.nan)
                prices[minutes.index.get_level_values(1)] = minutes.to_numpy()
                first = int(np.argmax(~np.isnan(prices)))
                prices = pandas.Series(prices[first:]).ffill().to_numpy()
                priced += len(minutes)
                if len(prices) < 2:
                    continue
                empty += (len(prices) - len(minutes))
                starts.append(sum(len(v) for v in values))
                values.append(np.log(prices[1:] / prices[:-1]))
                days += 1
        if priced < 2 or not values:
            raise IngestError('symbol %r has fewer than 2 priced minutes in session' % symbol,
                              'minute_returns', symbol=symbol)
        r = np.concatenate(values)
        meta = {'zero_fraction': empty / float(len(r)), 'sessions': days,
                'calendar': calendar.as_dict()}
        logger.debug('%s: %d returns over %d sessions, zero fraction %.4g',
                     symbol, len(r), days, meta['zero_fraction'])
        out.append(ReturnSeries(r, window_T=1, source=EMPIRICAL, symbol=symbol,
                                sessions=starts, meta=meta))
    return out


def pool_by_group(series_list, name=None):
    """group per-symbol series so the estimators average over symbols

    All series must share the return window and the session calendar.
    """
    group = SeriesGroup(series_list, name)
    if not len(group):
        raise IngestError('no series to pool', 'pool_by_group')
    windows = set(s.window_T for s in group)
    if len(windows) > 1:
        raise IngestError('cannot pool series with windows %s' % sorted(windows),
                          'pool_by_group', symbols=repr(group.symbols))
    calendars = set(repr(s.meta.get('calendar')) for s in group)
    if len(calendars) > 1:
        raise IngestError('cannot pool series built on different session calendars',
                          'pool_by_group', symbols=repr(group.symbols))
    return group


# EOF
