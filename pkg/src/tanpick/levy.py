"""Characteristic functions and Levy-Khintchine exponents of discrete measures.

Symmetric measures take a cosine-only path: the sine parts and the
compensator itx/(1+x^2) cancel exactly between mirrored atoms, so they are
skipped rather than summed in floating point. Values for symmetric measures
are therefore exactly real.
"""

import math

import numpy as np

from . import kernels
from .measures import LevyTriple, build_M
from .series import TruncationSpec, odd_square_tail_bound


def _as_grid(t):
    arr = np.asarray(t, dtype=float)
    return np.atleast_1d(arr).ravel(), arr.ndim == 0, arr.shape


def _shape(values, scalar, shape):
    if scalar:
        return values[0].item()
    return values.reshape(shape)


def _half(measure):
    loc, mass = measure.positive_half()
    return np.ascontiguousarray(loc), np.ascontiguousarray(2.0 * mass)


def _cos_tail(measure, ts):
    # sum over missing atoms of mass * (cos(t x) - 1), one value per t
    if not measure.corrected:
        return 0.0
    return measure.tail_estimate(lambda c: -2.0 * np.sin(0.5 * np.multiply.outer(c, ts)) ** 2)


def char_fn_finite(m, t):
    """phi_m(t) = sum mass * exp(i t x). Array in, array out."""
    ts, scalar, shape = _as_grid(t)
    if m.symmetric:
        loc, mass = _half(m)
        re = kernels.char_sums(loc, mass, ts)[0]
        re = re + np.sum(m.masses[m.locations == 0])
        if m.corrected:
            re = re + m.tail_estimate(lambda c: np.cos(np.multiply.outer(c, ts)))
        out = re.astype(complex)
    else:
        re, im = kernels.char_sums(m.locations, m.masses, ts)
        out = re + 1j * im
    return _shape(out, scalar, shape)


def compound_poisson_exponent(m, t):
    """log of the compound Poisson characteristic function: sum mass * (e^{itx} - 1)."""
    ts, scalar, shape = _as_grid(t)
    if m.symmetric:
        loc, mass = _half(m)
        out = (kernels.cos_dev_sum(loc, mass, ts) + _cos_tail(m, ts)).astype(complex)
    else:
        re, im = kernels.char_sums(m.locations, m.masses, ts)
        out = (re - math.fsum(m.masses)) + 1j * im
    return _shape(out, scalar, shape)


def levy_exponent(triple, t):
    """The Levy-Khintchine exponent i t a - sigma^2 t^2 / 2 + jump part.

    The truncation (and tail correction) is whatever the Levy measure carries.
    """
    ts, scalar, shape = _as_grid(t)
    M = triple.levy_measure
    gauss = 1j * ts * triple.shift_a - 0.5 * triple.gaussian_var * ts * ts
    if M.symmetric:
        loc, mass = _half(M)
        jumps = (kernels.cos_dev_sum(loc, mass, ts) + _cos_tail(M, ts)).astype(complex)
    else:
        loc, mass = M.locations, M.masses
        re, im = kernels.char_sums(loc, mass, ts)
        comp = np.dot(mass, loc / (1.0 + loc * loc))
        jumps = (re - math.fsum(mass)) + 1j * (im - ts * comp)
    return _shape(gauss + jumps, scalar, shape)


def cosine_tail_bound(t, n):
    """Bound on the dropped part of sum_k (cos(t c_k) - 1) over k = +-(n+1).."""
    return float(t) ** 2 * odd_square_tail_bound(n)


def counterpart_triple(trunc=TruncationSpec()):
    """The triple [0, 0, M]."""
    return LevyTriple(0.0, 0.0, build_M(trunc))


def mu_exponent_resolvent(t, trunc=TruncationSpec()):
    """-t^2 * sum_k c_k^2 / (t^2 c_k^2 + 1) over k = +-1..+-N, tail-corrected.

    By the partial-fraction series for tanh this equals -t * tanh(t).
    """
    t = float(t)
    if t == 0.0:
        return 0.0
    M = build_M(trunc)
    t2 = t * t

    def h(x):
        x2 = np.asarray(x, dtype=float) ** 2
        return -t2 * x2 / (t2 * x2 + 1.0)

    return float(M.integrate(h))
