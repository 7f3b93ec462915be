#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
run the herding command line with ``python -m herding``
"""
import sys

from .cli import main

if __name__ == '__main__':
    sys.exit(main())
