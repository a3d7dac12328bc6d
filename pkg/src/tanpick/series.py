"""Elementary series: the tanh partial fractions, modified Bessel I_k, and
Euler-Maclaurin tails for the odd-reciprocal families used throughout.

Every infinite sum in the package is cut by a :class:`TruncationSpec`.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy import integrate

BESSEL_REL_STOP = 1e-18
MAX_QUADRATURE_ORDER = 20
DEFAULT_TERMS = 10_000

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


@dataclass(frozen=True)
class TruncationSpec:
    """How many series terms to keep and whether to add the tail estimate."""

    num_terms: int = DEFAULT_TERMS
    tail_correction: bool = True

    def __post_init__(self):
        if isinstance(self.num_terms, bool) or int(self.num_terms) != self.num_terms:
            raise ValueError(f"num_terms must be an integer, got {self.num_terms!r}")
        if self.num_terms < 1:
            raise ValueError(f"num_terms must be >= 1, got {self.num_terms}")
        object.__setattr__(self, "num_terms", int(self.num_terms))


@dataclass(frozen=True)
class SeriesValue:
    value: float
    tail_bound: float


def odd_half_pi(k):
    """(2k - 1) * pi / 2, the reciprocal of the atom location c_k."""
    return (2.0 * np.asarray(k, dtype=float) - 1.0) * (math.pi / 2.0)


def euler_maclaurin_tail(f, integral_from, n):
    """Estimate sum_{k > n} f(k).

    ``integral_from(a)`` must return the integral of f over [a, inf).
    Uses integral + f(a)/2 - f'(a)/12 with a = n + 1. The derivative is a
    five-point stencil with step 1/2, so every node stays at k >= n.
    """
    a = n + 1
    deriv = (8.0 * (f(a + 0.5) - f(a - 0.5)) - (f(a + 1) - f(a - 1))) / 6.0
    return integral_from(a) + f(a) / 2.0 - deriv / 12.0


def odd_family_tail(pair_term, n):
    """Euler-Maclaurin tail of sum_{k>n} G(c_k), c_k = 1 / ((2k-1) pi / 2).

    ``pair_term`` is G as a vectorised function of c, with G(c) = O(c^2)
    near 0. The integral part is rewritten as (1/pi) * int_0^{c_a} G(c)/c^2 dc,
    smooth on a short interval, so 16-point Gauss-Legendre is exact to
    rounding for every family used here.
    """

    def at_index(k):
        return pair_term(1.0 / odd_half_pi(k))

    def integral_from(a):
        c_a = 1.0 / odd_half_pi(a)
        c = 0.5 * c_a * (_GL_NODES + 1.0)
        vals = np.asarray(pair_term(c))
        vals = vals / (c * c).reshape((-1,) + (1,) * (vals.ndim - 1))
        return 0.5 * c_a * np.tensordot(_GL_WEIGHTS, vals, axes=(0, 0)) / math.pi

    return euler_maclaurin_tail(at_index, integral_from, n)


def odd_square_tail_bound(n):
    """Upper bound on sum_{k>n} 1/((2k-1) pi/2)^2 (pairs not included)."""
    return 1.0 / (math.pi**2 * n)


def tanh_series(s, trunc=TruncationSpec()):
    """Partial-fraction evaluation of tanh(s).

    tanh s = 2 s * sum_{k>=1} 1 / (((2k-1) pi/2)^2 + s^2)

    ``tail_bound`` bounds the error of the *uncorrected* partial sum.
    """
    s = float(s)
    n = trunc.num_terms
    if s == 0.0:
        return SeriesValue(0.0, 0.0)
    u = odd_half_pi(np.arange(n, 0, -1))
    value = 2.0 * s * math.fsum(1.0 / (u * u + s * s))
    if trunc.tail_correction:

        def term(k):
            uk = odd_half_pi(k)
            return 2.0 * s / (uk * uk + s * s)

        def integral_from(a):
            return (2.0 / math.pi) * math.atan(s / odd_half_pi(a))

        value += float(euler_maclaurin_tail(term, integral_from, n))
    return SeriesValue(value, 2.0 * abs(s) * odd_square_tail_bound(n))


def bessel_I_series(k, z):
    """I_k(z) for integer k >= 0 from its power series.

    Stops once the next term falls below 1e-18 of the running sum.
    """
    if int(k) != k or k < 0:
        raise ValueError(f"order must be a nonnegative integer, got {k!r}")
    k = int(k)
    half = float(z) / 2.0
    term = 1.0
    for i in range(1, k + 1):
        term *= half / i
    if term == 0.0:
        return 0.0
    terms = [term]
    total = term
    q = half * half
    j = 0
    while True:
        j += 1
        term *= q / (j * (k + j))
        if abs(term) < BESSEL_REL_STOP * abs(total):
            break
        terms.append(term)
        total += term
    return math.fsum(terms)


def double_factorial_odd(k):
    """(2k - 1)!! as a float, k >= 1."""
    out = 1.0
    for j in range(1, 2 * k, 2):
        out *= j
    return out


def bessel_I_quadrature(k):
    """I_k(2) from its integral form over [-1, 1].

    Uses 2^k / ((2k-1)!! pi) * int (1-x^2)^(k-1/2) e^(-2x) dx, evaluated
    with QUADPACK's algebraic endpoint weight. Defined for 1 <= k <= 20.
    """
    if int(k) != k or k < 1:
        raise ValueError(f"integral form needs an integer order k >= 1, got {k!r}")
    k = int(k)
    if k > MAX_QUADRATURE_ORDER:
        raise ValueError(f"integral form offered only for k <= {MAX_QUADRATURE_ORDER}")
    alpha = k - 0.5
    val, _ = integrate.quad(
        lambda x: math.exp(-2.0 * x),
        -1.0,
        1.0,
        weight="alg",
        wvar=(alpha, alpha),
        epsabs=1e-12,
        epsrel=1e-14,
    )
    return 2.0**k / (double_factorial_odd(k) * math.pi) * val


def bessel_sum_identity_residual(K):
    """|I_0(2) + 2 * sum_{k=1}^K I_k(2) - e^2|."""
    if int(K) != K or K < 1:
        raise ValueError(f"K must be a positive integer, got {K!r}")
    parts = [bessel_I_series(0, 2.0)]
    parts += [2.0 * bessel_I_series(k, 2.0) for k in range(1, int(K) + 1)]
    parts.append(-math.exp(2.0))
    return abs(math.fsum(parts))
