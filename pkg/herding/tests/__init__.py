#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
to run this test suite, first build and install `herding`.

  $ python -m pip install ../..


then run the tests with:

  $ python -m herding.tests


or, if `pytest` is installed:

  $ pytest

"""
