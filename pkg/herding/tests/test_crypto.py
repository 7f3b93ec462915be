#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution

import os
import hashlib
import builtins

from herding.crypto import *


def test_hash():
    x = [1, 2, 3, '4', "'5'"]
    assert hash(x) == hashlib.sha256(repr(x).encode()).hexdigest()
    assert hash(x, 'md5') == hashlib.md5(repr(x).encode()).hexdigest()
    assert hash((1, 2), None) == builtins.hash((1, 2))
    assert 'sha256' in algorithms() and algorithms()[0] is None


def test_digest():
    assert digest('abc') == digest(b'abc')
    assert digest(b'abc') == 'ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad'
    name = 'crypto_digest.txt'
    with open(name, 'wb') as f:
        f.write(b'abc' * 1000)
    try:
        assert filehash(name) == digest(b'abc' * 1000)
        assert filehash(name, 'sha1', blocksize=7) == digest(b'abc' * 1000, 'sha1')
    finally:
        os.remove(name)


if __name__ == '__main__':
    test_hash()
    test_digest()
