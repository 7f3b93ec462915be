#!/usr/bin/env python
#
# Copyright (c) 2025 The herding developers.
# License: 3-clause BSD.  The full license text is available at:
#  - LICENSE in the root of the source distribution
"""
exact event-driven simulation of N agents in the three-state herding model

Each agent is a fundamentalist (f), an optimist (o), or a pessimist (p).
An agent in state i switches to state j at rate sigma_ij/N + h_ij N_j/N,
with the symmetric choices::

    sigma_fo = sigma_fp = sigma_fc/2,   h_fo = h_fp = h
    sigma_of = sigma_pf = sigma_cf,     h_of = h_pf = h
    sigma_op = sigma_po = sigma_cc,     h_op = h_po = H h

so the f <-> c (chartist) transitions occur at N pi_fc and N pi_cf, with
pi_fc = n_f (sigma_fc/N + h (1-n_f)) and pi_cf = (1-n_f) (sigma_cf/N + h n_f).
For large N the occupations follow the diffusion limit integrated in
herding.model, which makes this chain an independent check of the
stationary laws; it is not used to generate price paths.
"""
import math
import logging
from collections import namedtuple

from .errors import ParameterError
from .tools import generator

__all__ = ['AgentCounts', 'Rates', 'rates_from_params', 'transition_rates',
           'agent_oracle']

logger = logging.getLogger(__name__)

_BLOCK = 1 << 14
_MAX_AGENTS = 1 << 31


class AgentCounts(namedtuple('AgentCounts', ['N', 'N_f', 'N_o', 'N_p', 't'])):
    """occupation numbers of the three agent states at time t"""
    __slots__ = ()

    def __new__(cls, N, N_f, N_o, N_p, t=0.0):
        N, N_f, N_o, N_p = int(N), int(N_f), int(N_o), int(N_p)
        if min(N_f, N_o, N_p) < 0 or N_f + N_o + N_p != N:
            raise ParameterError('need nonnegative counts with N_f + N_o + N_p = N, got %r'
                                 % ((N, N_f, N_o, N_p),), 'AgentCounts', module='oracle')
        return super(AgentCounts, cls).__new__(cls, N, N_f, N_o, N_p, float(t))

    @property
    def n_f(self):
        """fraction of fundamentalists"""
        return self.N_f / self.N

    @property
    def xi(self):
        """mood of the chartists, (N_o - N_p)/(N_o + N_p); nan without chartists"""
        chartists = self.N_o + self.N_p
        return (self.N_o - self.N_p) / chartists if chartists else math.nan

    @property
    def log_price(self):
        """log-price (n_o - n_p)/n_f; nan without fundamentalists"""
        return (self.N_o - self.N_p) / self.N_f if self.N_f else math.nan


Rates = namedtuple('Rates', ['sigma_cf', 'sigma_fc', 'sigma_cc', 'h', 'H'])
Rates.__doc__ = """unscaled transition rates, in 1/seconds (H is dimensionless)"""


def rates_from_params(params):
    """get the unscaled Rates that correspond to the given ModelParams"""
    return Rates(params.eps_cf * params.h, params.eps_fc * params.h,
                 params.eps_cc * params.H * params.h, params.h, params.H)


def transition_rates(counts, rates):
    """get the total rates of the six one-agent transitions

    Returns a tuple (f->o, f->p, o->f, p->f, o->p, p->o), in events per unit time.
    """
    N, nf, no, np_ = counts.N, counts.N_f, counts.N_o, counts.N_p
    return _rates(N, nf, no, np_, rates.sigma_cf / N, rates.sigma_fc / (2.0 * N),
                  rates.sigma_cc / N, rates.h / N, rates.H * rates.h / N)


def _rates(N, nf, no, np_, scf, sfc, scc, hN, HhN):
    return (nf * (sfc + hN * no), nf * (sfc + hN * np_),
            no * (scf + hN * nf), np_ * (scf + hN * nf),
            no * (scc + HhN * np_), np_ * (scc + HhN * no))

# change of (N_f, N_o, N_p) for each transition
_MOVES = ((-1, 1, 0), (-1, 0, 1), (1, -1, 0), (1, 0, -1), (0, -1, 1), (0, 1, -1))


def _validate(N, rates, duration, sample_every):
    if int(N) != N or N < 3:
        raise ParameterError('need an integer N >= 3, got %r' % N, 'agent_oracle', module='oracle')
    rates = Rates(*(float(r) for r in rates))
    if not all(math.isfinite(r) and r > 0 for r in rates):
        raise ParameterError('all rates must be positive and finite, got %r' % (rates,),
                             'agent_oracle', module='oracle')
    bound = max(rates.sigma_cf, rates.sigma_fc, rates.sigma_cc) + rates.H * rates.h * N
    if N > _MAX_AGENTS or not math.isfinite(bound * N):
        raise ParameterError('transition rates overflow for N=%r' % N, 'agent_oracle', module='oracle')
    if not duration > 0:
        raise ParameterError('duration must be positive', 'agent_oracle', module='oracle')
    if sample_every is not None and not sample_every > 0:
        raise ParameterError('sample_every must be positive', 'agent_oracle', module='oracle')
    return int(N), rates


def agent_oracle(N, rates, duration, seed=None, sample_every=None, initial=None):
    """simulate the N-agent chain with exact event-driven sampling

    N: number of agents (>= 3)
    rates: Rates (sigma_cf, sigma_fc, sigma_cc, h, H), all positive
    duration: simulated time, in the units of the rates
    seed: integer seed
    sample_every: record the state every this many time units [default:
        record after every event]
    initial: starting AgentCounts [default: N_f near N sigma_cf/(sigma_cf+sigma_fc),
        chartists split evenly]

    Returns a list of AgentCounts.  The waiting time to the next event is
    exponential with the total rate, and the event is chosen with probability
    proportional to its rate.
    """
    N, rates = _validate(N, rates, duration, sample_every)
    rng = generator(seed, 'oracle')
    if initial is None:
        nf = int(round(N * rates.sigma_cf / (rates.sigma_cf + rates.sigma_fc)))
        no = (N - nf) // 2
        state = AgentCounts(N, nf, no, N - nf - no)
    else:
        state = AgentCounts(*initial)
        if state.N != N:
            raise ParameterError('initial counts do not sum to N', 'agent_oracle', module='oracle')
    nf, no, np_ = state.N_f, state.N_o, state.N_p
    consts = (rates.sigma_cf / N, rates.sigma_fc / (2.0 * N), rates.sigma_cc / N,
              rates.h / N, rates.H * rates.h / N)
    t = 0.0
    out = [AgentCounts(N, nf, no, np_, t)]
    next_sample = sample_every
    draws = rng.random((_BLOCK, 2)).tolist()
    k = 0
    events = 0
    log = math.log
    while True:
        r = _rates(N, nf, no, np_, *consts)
        total = r[0] + r[1] + r[2] + r[3] + r[4] + r[5]
        if k == _BLOCK:
            draws = rng.random((_BLOCK, 2)).tolist()
            k = 0
        u1, u2 = draws[k]
        k += 1
        t_next = t - log(1.0 - u1) / total
        if sample_every is not None:
            while next_sample <= min(t_next, duration):
                out.append(AgentCounts(N, nf, no, np_, next_sample))
                next_sample += sample_every
        if t_next > duration:
            break
        target = u2 * total
        acc = 0.0
        for j in range(5):
            acc += r[j]
            if target < acc:
                break
        else:
            j = 5
        df, do, dp = _MOVES[j]
        nf, no, np_ = nf + df, no + do, np_ + dp
        t = t_next
        events += 1
        if sample_every is None:
            out.append(AgentCounts(N, nf, no, np_, t))
    logger.debug('oracle N=%d: %d events in t=%g', N, events, duration)
    return out


# EOF
