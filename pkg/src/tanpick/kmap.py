"""The random-integral mapping K at exponent level, and the two Laplace
transform identities built on the measures m and M.

For mu = [0, 0, M]:

    log phi_{K(mu)}(t) = int_0^inf log phi_mu(s t) e^{-s} ds

is computed by Gauss-Laguerre quadrature of the truncated cosine sum.
Laplace transforms of a general integrand go through an adaptive scheme
with an explicit decay check at the cutoff.
"""

from dataclasses import dataclass
from functools import lru_cache
import math
from typing import Literal, NamedTuple

import numpy as np
from scipy import integrate
from scipy.special import roots_laguerre

from .errors import Divergent, DomainError
from .levy import counterpart_triple, levy_exponent
from .measures import build_m
from .series import TruncationSpec


@dataclass(frozen=True)
class QuadratureSpec:
    scheme: Literal["exp_weighted", "adaptive"] = "exp_weighted"
    node_count: int = 200
    upper_cutoff: float = 50.0
    abs_tol: float = 1e-10

    def __post_init__(self):
        if self.scheme not in ("exp_weighted", "adaptive"):
            raise ValueError(f"unknown quadrature scheme {self.scheme!r}")
        if self.node_count < 16:
            raise ValueError("node_count must be at least 16")
        if not self.upper_cutoff > 0 or not self.abs_tol > 0:
            raise ValueError("upper_cutoff and abs_tol must be positive")

    @classmethod
    def for_laplace(cls, w, abs_tol=1e-10):
        """Adaptive scheme with a cutoff long enough for e^{-w x} to bury the tail."""
        return cls("adaptive", 500, max(50.0, 40.0 / w), abs_tol)

    @classmethod
    def for_eq7(cls, w, abs_tol=1e-10):
        return cls("adaptive", 500, max(50.0, 30.0 / (w - 1.0)), abs_tol)


EXP_WEIGHTED = QuadratureSpec()


class LaplaceValue(NamedTuple):
    value: float
    error_estimate: float
    tail_bound: float


@lru_cache(maxsize=8)
def _laguerre(n):
    x, w = roots_laguerre(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def _decay_tail(h, cutoff, abs_tol):
    """Envelope test near the cutoff; returns an estimate of int_cutoff^inf |h|."""
    early = np.linspace(0.5 * cutoff, 0.75 * cutoff, 9)
    late = np.linspace(0.75 * cutoff, cutoff, 9)
    with np.errstate(over="ignore", invalid="ignore"):
        e = max(abs(h(x)) for x in early)
        l = max(abs(h(x)) for x in late)
    if not (math.isfinite(e) and math.isfinite(l)):
        raise Divergent("integrand is not finite near the cutoff")
    if l == 0.0:
        return 0.0
    if l >= e and l > abs_tol:
        raise Divergent(f"integrand does not decay: |h| ~ {l:.3g} at x = {cutoff:g}")
    if l >= e:
        return l * cutoff
    rate = math.log(e / l) / (0.25 * cutoff)
    return l / rate


def _adaptive(h, quad):
    tail = _decay_tail(h, quad.upper_cutoff, quad.abs_tol)
    val, err = integrate.quad(
        h, 0.0, quad.upper_cutoff, epsabs=quad.abs_tol, epsrel=1e-12, limit=quad.node_count
    )
    return LaplaceValue(val, err, tail)


def laplace_numeric(f, w, quad=None):
    """int_0^inf f(x) e^{-w x} dx for w > 0.

    ``exp_weighted`` uses Gauss-Laguerre after rescaling by w and requires a
    vectorised f. ``adaptive`` integrates over [0, upper_cutoff] with QUADPACK
    and raises :class:`Divergent` if f e^{-w x} is not decaying there.
    """
    w = float(w)
    if not w > 0:
        raise DomainError("the Laplace variable must be positive")
    if quad is None:
        quad = QuadratureSpec.for_laplace(w)
    if quad.scheme == "exp_weighted":
        x, wt = _laguerre(quad.node_count)
        vals = np.asarray(f(x / w), dtype=float)
        return LaplaceValue(float(np.dot(wt, vals)) / w, math.nan, math.nan)

    def h(x):
        return float(f(x)) * math.exp(-w * x)

    return _adaptive(h, quad)


def k_exponent(t, trunc=TruncationSpec(100_000), quad=EXP_WEIGHTED):
    """log phi_{K(mu)}(t) for mu = [0, 0, M] by exp-weighted quadrature.

    Equals -t tanh(t).
    """
    t = float(t)
    if t == 0.0:
        return 0.0
    if quad.scheme != "exp_weighted":
        raise ValueError("k_exponent integrates against e^{-s}; use the exp_weighted scheme")
    x, wt = _laguerre(quad.node_count)
    g = np.real(levy_exponent(counterpart_triple(trunc), x * t))
    return float(np.dot(wt, g))


def eq6_lhs(t, trunc=TruncationSpec(100_000), quad=None):
    """i t^2 * Laplace[log conj(phi_mu)(s); t].

    The exponent of mu is real, so conjugation changes nothing. Defined for
    t > 0; negative t is reported through the oddness of the right side.
    """
    t = float(t)
    if t == 0.0:
        raise DomainError("t = 0 is excluded")
    if t < 0:
        return -eq6_lhs(-t, trunc, quad)
    triple = counterpart_triple(trunc)
    if quad is None:
        quad = QuadratureSpec.for_laplace(t)

    def f(s):
        return np.real(levy_exponent(triple, s))

    lap = laplace_numeric(f, t, quad)
    return 1j * t * t * lap.value


def eq6_middle(t, trunc=TruncationSpec(100_000), quad=EXP_WEIGHTED):
    """i t * log phi_{K(mu)}(-1/t)."""
    t = float(t)
    if t == 0.0:
        raise DomainError("t = 0 is excluded")
    return 1j * t * k_exponent(-1.0 / t, trunc, quad)


def eq7_lhs(w, trunc=TruncationSpec(), quad=None):
    """(w^2 - 1) * Laplace[phi_m(x) - tanh(1) cosh(x); w], w > 1.

    Each cosine is paired with its own share of the cosh term so the two
    large pieces never get subtracted wholesale.
    """
    w = float(w)
    if not w > 1.0:
        raise DomainError("the transform exists only for w > 1")
    if quad is None:
        quad = QuadratureSpec.for_eq7(w)
    if quad.scheme != "adaptive":
        raise ValueError("eq7_lhs needs the adaptive scheme")
    m = build_m(trunc)
    loc, mass = m.positive_half()
    mass2 = 2.0 * mass
    missing = math.tanh(1.0) - m.raw_total_mass()

    def weighted_cosh(x):
        return 0.5 * (math.exp((1.0 - w) * x) + math.exp(-(1.0 + w) * x))

    def h(x):
        decay = math.exp(-w * x)
        ch = weighted_cosh(x)
        val = float(np.dot(mass2, np.cos(loc * x) * decay - ch))
        if m.corrected:
            val += float(m.tail_estimate(lambda c: np.cos(np.asarray(c) * x))) * decay
        return val - missing * ch

    lap = _adaptive(h, quad)
    return (w * w - 1.0) * lap.value
