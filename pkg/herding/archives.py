#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
dictionary-style archives of tabular artifacts

An artifact is a table and its metadata.  A ``dir_archive`` stores each one
as ``<key>.csv`` with a ``<key>.meta.json`` sidecar, writing to a temporary
file and renaming it into place, and keeps a ``manifest.json`` with the
content hash of every file it holds.  A ``dict_archive`` holds the same
artifacts in memory.
"""
import os
import json
import logging
from collections.abc import KeysView, ValuesView, ItemsView

import pandas
from pox import mkdir, rmtree, walk

from ._abc import archive, Artifact, as_artifact, render, jsonable
from .crypto import digest, filehash

__all__ = ['dict_archive', 'dir_archive', 'Artifact', 'MANIFEST']

logger = logging.getLogger(__name__)

CSV = '.csv'
META = '.meta.json'
MANIFEST = 'manifest.json'
TEMP = '.tmp_'


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, default=jsonable) + '\n'


class dict_archive(archive):
    """dictionary of artifacts held in memory"""
    def __init__(self, *args, **kwds):
        """initialize a dictionary archive"""
        name = kwds.pop('name', None)
        dict.__init__(self)
        self.__state__ = {'id': name}
        self.update(*args, **kwds)
        return
    def __setitem__(self, key, value):
        dict.__setitem__(self, key, as_artifact(value))
    __setitem__.__doc__ = dict.__setitem__.__doc__
    def update(self, *args, **kwds):
        for (key, value) in dict(*args, **kwds).items():
            self.__setitem__(key, value)
        return
    update.__doc__ = dict.update.__doc__
    def copy(self, name=None):
        "D.copy(name) -> a copy of D, with the given name"
        if name is None:
            name = self.__state__['id']
        return dict_archive(self.__asdict__(), name=name)
    pass


class dir_archive(archive):
    """dictionary-style interface to a folder of csv artifacts"""
    def __init__(self, dirname=None, permissions=None, **kwds):
        """initialize a file folder with a synchronized dictionary interface

    Args:
        dirname (str, default='herding_output'): path of the archive root directory
        permissions (octal, default=0o775): read/write permission indicator
        """
        if dirname is None:
            dirname = 'herding_output'
        self.__state__ = {'permissions': permissions, 'id': dirname}
        try:
            self.__state__['id'] = mkdir(dirname, mode=permissions)
        except OSError: # then directory already exists
            self.__state__['id'] = os.path.abspath(dirname)
        dict.__init__(self)
        if kwds:
            self.update(kwds)
        return
    def __asdict__(self):
        """build a dictionary containing the archive contents"""
        return dict((key, self.__getitem__(key)) for key in self._keys())
    def __getitem__(self, key):
        return self._lookup(key)
    __getitem__.__doc__ = dict.__getitem__.__doc__
    def __setitem__(self, key, value):
        self._store(key, as_artifact(value))
        return
    __setitem__.__doc__ = dict.__setitem__.__doc__
    def __delitem__(self, key):
        if key not in self:
            raise KeyError(key)
        for path in (self._path(key, CSV), self._path(key, META)):
            if os.path.exists(path): os.remove(path)
        return
    __delitem__.__doc__ = dict.__delitem__.__doc__
    def __contains__(self, key):
        return os.path.exists(self._path(key, CSV))
    __contains__.__doc__ = dict.__contains__.__doc__
    def __iter__(self):
        return iter(self._keys())
    __iter__.__doc__ = dict.__iter__.__doc__
    def __len__(self):
        return len(self._keys())
    def __eq__(self, y):
        if not isinstance(y, archive): return NotImplemented
        return self.hashes() == y.hashes()
    def __ne__(self, y):
        y = self.__eq__(y)
        return NotImplemented if y is NotImplemented else not y
    __hash__ = None
    def __repr__(self):
        return "dir_archive('%s', %s)" % (self.name, sorted(self._keys()))
    def get(self, key, value=None):
        try:
            return self.__getitem__(key)
        except KeyError:
            return value
    get.__doc__ = dict.get.__doc__
    def keys(self):
        return KeysView(self)
    keys.__doc__ = dict.keys.__doc__
    def items(self):
        return ItemsView(self)
    items.__doc__ = dict.items.__doc__
    def values(self):
        return ValuesView(self)
    values.__doc__ = dict.values.__doc__
    def update(self, adict=(), **kwds):
        for (key, value) in dict(adict, **kwds).items():
            self.__setitem__(key, value)
        return
    update.__doc__ = dict.update.__doc__
    def pop(self, key, *value):
        try:
            memo = self.__getitem__(key)
        except KeyError:
            if value: return value[0]
            raise
        self.__delitem__(key)
        return memo
    pop.__doc__ = dict.pop.__doc__
    def clear(self):
        rmtree(self.__state__['id'], self=False, ignore_errors=True)
        return
    clear.__doc__ = dict.clear.__doc__
    def rendered(self, key):
        """get the csv bytes of the artifact stored at key"""
        if key not in self:
            raise KeyError(key)
        with open(self._path(key, CSV), 'rb') as f:
            return f.read()

    # files
    def files(self):
        """get the names of the artifact and sidecar files, relative to the root"""
        root = self.__state__['id']
        found = []
        for suffix in (CSV, META):
            found.extend(walk(root, patterns='*' + suffix, recurse=False,
                              folders=False, files=True, links=False))
        return sorted(os.path.relpath(f, root) for f in found
                      if not os.path.basename(f).startswith(TEMP))
    def file_hashes(self, algorithm='sha256'):
        """get a dict of {file name: hex digest} for every artifact file"""
        root = self.__state__['id']
        return dict((f, filehash(os.path.join(root, f), algorithm)) for f in self.files())
    def write_manifest(self, config=None, algorithm='sha256', **extra):
        """write manifest.json listing every file with its content hash"""
        manifest = {'algorithm': algorithm, 'files': self.file_hashes(algorithm),
                    'config': config}
        manifest.update(extra)
        self._write(os.path.join(self.__state__['id'], MANIFEST), _dumps(manifest).encode())
        return manifest
    def read_manifest(self):
        """get the stored manifest, or None"""
        path = os.path.join(self.__state__['id'], MANIFEST)
        if not os.path.exists(path):
            return None
        with open(path) as f:
            return json.load(f)
    def verify(self, manifest=None):
        """get the files whose hash differs from the manifest

        Returns a sorted list of file names that are missing, changed, or
        not listed in the manifest.
        """
        if manifest is None:
            manifest = self.read_manifest()
        if manifest is None:
            return self.files()
        listed = manifest.get('files', {})
        found = self.file_hashes(manifest.get('algorithm', 'sha256'))
        names = set(listed).union(found)
        return sorted(f for f in names if listed.get(f) != found.get(f))

    # internals
    def _path(self, key, suffix):
        return os.path.join(self.__state__['id'], str(key) + suffix)
    def _keys(self):
        return [f[:-len(CSV)] for f in self.files() if f.endswith(CSV)]
    def _lookup(self, key):
        path = self._path(key, CSV)
        if not os.path.exists(path):
            raise KeyError(key)
        frame = pandas.read_csv(path, float_precision='round_trip')
        meta = {}
        if os.path.exists(self._path(key, META)):
            with open(self._path(key, META)) as f:
                meta = json.load(f)
        return Artifact(frame, meta)
    def _write(self, path, data):
        "write data to a temporary file, then move it to path"
        folder, name = os.path.split(path)
        temp = os.path.join(folder, TEMP + digest(name + repr(os.getpid()), 'md5'))
        try:
            with open(temp, 'wb') as f:
                f.write(data)
            os.replace(temp, path)
        finally:
            if os.path.exists(temp): os.remove(temp)
        return
    def _store(self, key, artifact):
        "store the table and its sidecar"
        key = str(key)
        if os.sep in key or key.startswith(TEMP) or not key:
            raise KeyError("unsuitable artifact name %r" % key)
        self._write(self._path(key, CSV), render(artifact.frame))
        self._write(self._path(key, META), _dumps(artifact.meta).encode())
        logger.debug('stored %s in %s', key, self.__state__['id'])
        return

    # interface
    def __get_name(self):
        return os.path.basename(self.__state__['id'])
    def __archive(self, archive):
        raise ValueError("cannot set new archive")
    name = property(__get_name, __archive)
    pass


# EOF
