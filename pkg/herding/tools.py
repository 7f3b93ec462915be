#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
Assorted python tools

Main functions exported are::
    - generator: build a seeded random generator for a named stream
    - cpu_count: number of usable processors
"""
import os
import numpy as np

__all__ = ['generator', 'cpu_count', 'FLOAT_FORMAT']

# full precision for floats written to csv
FLOAT_FORMAT = '%.17g'

# independent random streams drawn from the same seed
STREAMS = {'path': 0, 'returns': 1, 'oracle': 2, 'ensemble': 3}


def generator(seed, stream='path'):
    """get a numpy Generator for the given integer seed and named stream

    Streams with the same seed are statistically independent, and the same
    (seed, stream) pair always reproduces the same sequence of deviates.
    """
    if seed is None:
        return np.random.default_rng()
    key = STREAMS[stream] if isinstance(stream, str) else int(stream)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), key])))


def cpu_count():
    """get the number of processors available to this process"""
    try:
        return len(os.sched_getaffinity(0)) or 1
    except AttributeError: # not on linux
        return os.cpu_count() or 1


if __name__=='__main__':
    pass


# End of file
