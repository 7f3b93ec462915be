#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
exceptions raised by herding

All errors derive from HerdingError, which records the module and the
operation that failed.  The command-line front end turns any HerdingError
into a structured report with ``as_report``.
"""

__all__ = ['HerdingError', 'ParameterError', 'IntegrationError',
           'IngestError', 'EstimationError', 'ComparisonError']


class HerdingError(Exception):
    """base class for all errors raised by herding"""
    module = 'herding'

    def __init__(self, message, operation=None, module=None, **details):
        Exception.__init__(self, message)
        self.message = message
        self.operation = operation
        if module is not None:
            self.module = module
        self.details = details

    def as_report(self):
        """build a json-friendly dict describing the error"""
        details = dict((k, v if isinstance(v, (int, float, str, type(None)))
                        else repr(v)) for (k, v) in self.details.items())
        return {
            'module': self.module,
            'operation': self.operation,
            'error': self.__class__.__name__,
            'message': self.message,
            'details': details,
        }


class ParameterError(HerdingError, ValueError):
    """invalid model parameters, noise settings, or configuration"""
    pass


class IntegrationError(HerdingError, ArithmeticError):
    """non-finite state produced while integrating the difference equations

    state = the MarketState before the failing step
    step = index of the failing step
    """
    module = 'model'

    def __init__(self, message, state=None, step=None, **kwds):
        kwds.setdefault('operation', 'sde_step')
        HerdingError.__init__(self, message, state=state, step=step, **kwds)
        self.state = state
        self.step = step


class IngestError(HerdingError, ValueError):
    """fatal problem while reading empirical trade data

    line = line number in the input, if known
    path = the input file, if known
    errors = list of (line, reason) row errors collected before failing
    """
    module = 'ingest'

    def __init__(self, message, operation=None, line=None, path=None, errors=None, **kwds):
        HerdingError.__init__(self, message, operation, line=line, path=path, **kwds)
        self.line = line
        self.path = path
        self.errors = [] if errors is None else list(errors)


class EstimationError(HerdingError, ValueError):
    """invalid input to a series transformation or a statistical estimator"""
    module = 'stats'


class ComparisonError(HerdingError, ValueError):
    """model and empirical artifacts cannot be compared"""
    module = 'cli'


# EOF
