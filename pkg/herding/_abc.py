#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
base class for artifact archives in memory or on disk
"""
from collections import namedtuple

import numpy as np
import pandas

from .tools import FLOAT_FORMAT

Artifact = namedtuple('Artifact', ['frame', 'meta'])
Artifact.__doc__ = """a table (pandas.DataFrame) and its metadata (dict)"""


def as_artifact(value):
    """convert a PricePath, ReturnSeries, estimate, or DataFrame to an Artifact"""
    if isinstance(value, Artifact):
        return value
    if isinstance(value, pandas.DataFrame):
        return Artifact(value, {})
    try:
        return Artifact(value.to_frame(), value.metadata())
    except AttributeError:
        raise TypeError("cannot archive an object of type '%s'" % type(value).__name__)


def render(frame):
    """render a table as csv bytes, with full float precision"""
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n').encode()


def jsonable(obj):
    """default hook for json.dumps, for numpy scalars and arrays"""
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, (np.ndarray, set, frozenset, tuple)):
        return list(obj) if not isinstance(obj, np.ndarray) else obj.tolist()
    if isinstance(obj, np.bool_):
        return bool(obj)
    raise TypeError("'%s' is not json serializable" % type(obj).__name__)


class archive(dict):
    """dictionary with an artifact archive interface"""
    def __init__(self, *args, **kwds):
        """initialize an archive"""
        dict.__init__(self, *args, **kwds)
        self.__state__ = {'id': 'abc'}
        raise NotImplementedError("cannot instantiate archive base class")
    def __asdict__(self):
        """build a dictionary containing the archive contents"""
        return dict(self.items())
    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, sorted(self.keys()))
    __repr__.__doc__ = dict.__repr__.__doc__
    def setdefault(self, key, default=None):
        if key not in self:
            self[key] = default
        return self[key]
    setdefault.__doc__ = dict.setdefault.__doc__
    def rendered(self, key):
        """get the csv bytes of the artifact stored at key"""
        return render(self[key].frame)
    def hashes(self, algorithm='sha256'):
        """get a dict of {key: hex digest of the rendered csv}"""
        from .crypto import digest
        return dict((key, digest(self.rendered(key), algorithm)) for key in self.keys())
    def frames(self, prefix=''):
        """get a dict of {key: frame} for the keys that start with prefix"""
        return dict((k, self[k].frame) for k in sorted(self.keys()) if k.startswith(prefix))
    def __get_name(self):
        return self.__state__['id']
    def __get_state(self):
        return self.__state__.copy()
    def __archive(self, archive):
        raise ValueError("cannot set new archive")
    name = property(__get_name, __archive)
    state = property(__get_state, __archive)
    pass


# EOF
