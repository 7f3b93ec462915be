#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
content hashing for artifacts, manifests, and parameter provenance
"""
import hashlib
__hash = hash

__all__ = ['algorithms', 'hash', 'digest', 'filehash']

DEFAULT = 'sha256'


def algorithms():
    """return a tuple of available hash algorithms"""
    try:
        algs =  tuple(sorted(hashlib.algorithms_available))
    except AttributeError:
        algs = ('md5', 'sha1', 'sha224', 'sha256', 'sha384', 'sha512')
    return (None,) + algs

def hash(object, algorithm=DEFAULT):
    if algorithm is None:
        return __hash(object)
    return hashlib.new(algorithm, repr(object).encode()).hexdigest()
hash.algorithms = algorithms
hash.__doc__ = \
"""hash the repr of an object

    algorithm: one of %s
    The default is algorithm='%s'; algorithm=None uses python's 'hash',
    which is not stable across interpreter sessions.""" % (repr(algorithms()), DEFAULT)


def digest(data, algorithm=DEFAULT):
    """get the hex digest of a bytes (or str) object"""
    if isinstance(data, str):
        data = data.encode()
    return hashlib.new(algorithm, data).hexdigest()


def filehash(filename, algorithm=DEFAULT, blocksize=1<<20):
    """get the hex digest of the contents of a file"""
    h = hashlib.new(algorithm)
    with open(filename, 'rb') as f:
        for block in iter(lambda: f.read(blocksize), b''):
            h.update(block)
    return h.hexdigest()


# EOF
