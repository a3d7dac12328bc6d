"""Random objects: Rademacher signs, the compound-Poisson block
Y = r_1 + ... + r_{N_2} with N_2 ~ Poisson(2), its Skellam twin P_1 - P_2,
and the series X = sum_n c_n Y_n.

All draws come from a :class:`RandomSource`, a PCG64 stream keyed by
``(seed, stream_id)``. Samplers consume fixed numbers of raw words per draw,
so results do not depend on chunking or on the kernel backend.
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from . import kernels
from .errors import EmptySample
from .measures import atom_location
from .series import TruncationSpec, bessel_I_series, odd_half_pi, odd_square_tail_bound

BLOCK_RATE = 2.0
MAX_BLOCK_COUNT = 64  # one 64-bit word of signs per block
PMF_SUPPORT = 30
DEFAULT_X_TERMS = 200
_CHUNK_WORDS = 1 << 22


class RandomSource:
    """Deterministic stream of 64-bit words.

    Identical ``(seed, stream_id)`` pairs replay identical sequences;
    different stream ids are spawned children of the same seed and are
    statistically independent.
    """

    def __init__(self, seed, stream_id=0):
        seed = int(seed)
        stream_id = int(stream_id)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if stream_id < 0:
            raise ValueError("stream_id must be nonnegative")
        self.seed = seed
        self.stream_id = stream_id
        self._bitgen = np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream_id,)))

    def __repr__(self):
        return f"RandomSource(seed={self.seed}, stream_id={self.stream_id})"

    def words(self, n):
        return self._bitgen.random_raw(int(n)).astype(np.uint64, copy=False)

    def uniforms(self, n):
        """Uniforms on [0, 1) from the top 53 bits of each word."""
        return (self.words(n) >> np.uint64(11)).astype(np.float64) / 9007199254740992.0


@lru_cache(maxsize=32)
def poisson_cdf_table(lam, length=None):
    """Cumulative Poisson(lam) probabilities by the forward recurrence."""
    lam = float(lam)
    if not 0 < lam <= 700:
        raise ValueError("Poisson rate must lie in (0, 700]")
    if length is None:
        length = int(lam + 12.0 * math.sqrt(lam) + 40)
    p = math.exp(-lam)
    s = p
    out = np.empty(length)
    out[0] = s
    for k in range(1, length):
        p *= lam / k
        s += p
        out[k] = s
    out.flags.writeable = False
    return out


def _block_cdf():
    return poisson_cdf_table(BLOCK_RATE, MAX_BLOCK_COUNT)


def _scalar_or(arr, size):
    return arr[0].item() if size is None else arr


def sample_rademacher(rng, n):
    """n i.i.d. signs, P(+1) = P(-1) = 1/2, as int8."""
    n = int(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    words = rng.words((n + 63) // 64)
    return kernels.signs_from_words(words, n)


def sample_Y_counts(rng, size):
    """(S_plus, S_minus): numbers of +1 and -1 signs in each block."""
    words = rng.words(2 * int(size))
    plus, total = kernels.rademacher_blocks(words, _block_cdf())
    return plus, total - plus


def sample_Y(rng, size=None):
    """Y = r_1 + ... + r_{N_2}, N_2 ~ Poisson(2); an int, or an int64 array."""
    n = 1 if size is None else int(size)
    plus, minus = sample_Y_counts(rng, n)
    return _scalar_or(plus - minus, size)


def sample_poisson(rng, lam, size=None):
    n = 1 if size is None else int(size)
    out = kernels.poisson_from_words(rng.words(n), poisson_cdf_table(lam))
    return _scalar_or(out, size)


def sample_skellam_direct(rng, size=None, lam1=1.0, lam2=1.0):
    """P_1 - P_2 with independent Poisson(lam1), Poisson(lam2) draws."""
    n = 1 if size is None else int(size)
    words = rng.words(2 * n)
    p1 = kernels.poisson_from_words(words[0::2].copy(), poisson_cdf_table(lam1))
    p2 = kernels.poisson_from_words(words[1::2].copy(), poisson_cdf_table(lam2))
    return _scalar_or(p1 - p2, size)


def skellam_pmf(k):
    """P(Y = k) = e^{-2} I_|k|(2). Scalar or array of integers."""
    arr = np.asarray(k)
    if not np.all(np.equal(np.mod(arr, 1), 0)):
        raise ValueError("skellam_pmf is defined on integers")
    vals = np.array([math.exp(-2.0) * bessel_I_series(abs(int(j)), 2.0) for j in arr.ravel()])
    if arr.ndim == 0:
        return float(vals[0])
    return vals.reshape(arr.shape)


def skellam_pmf_table(max_k=PMF_SUPPORT):
    ks = np.arange(-int(max_k), int(max_k) + 1)
    return ks, skellam_pmf(ks)


def series_coefficients(trunc):
    n = trunc.num_terms
    return np.array([atom_location(j) for j in range(1, n + 1)])


def x_tail_sd_bound(trunc):
    """Bound on the sd of the dropped part sum_{n>N} c_n Y_n."""
    return math.sqrt(2.0 * odd_square_tail_bound(trunc.num_terms))


def x_tail_sd(trunc):
    """sqrt(2 * sum_{n>N} c_n^2), using sum_{n>=1} c_n^2 = 1/2."""
    n = trunc.num_terms
    head = math.fsum(1.0 / odd_half_pi(np.arange(n, 0, -1)) ** 2)
    return math.sqrt(max(2.0 * (0.5 - head), 0.0))


def sample_X(rng, trunc=TruncationSpec(DEFAULT_X_TERMS, False), size=None):
    """X = sum_{n=1}^N c_n Y_n with independent blocks Y_n.

    The tail-correction flag of ``trunc`` is ignored: there is no exact way
    to sample the dropped tail. See :func:`x_tail_sd_bound`.
    """
    n = 1 if size is None else int(size)
    coeffs = series_coefficients(trunc)
    nblocks = coeffs.size
    cdf = _block_cdf()
    per_chunk = max(1, _CHUNK_WORDS // (2 * nblocks))
    out = np.empty(n)
    done = 0
    while done < n:
        take = min(per_chunk, n - done)
        words = rng.words(2 * nblocks * take)
        out[done:done + take] = kernels.series_sum(words, cdf, coeffs)
        done += take
    return _scalar_or(out, size)


@dataclass(frozen=True)
class EcfEstimate:
    t_grid: np.ndarray
    values: np.ndarray
    std_errors: np.ndarray
    sample_count: int


def ecf(samples, t_grid):
    """Empirical characteristic function with the standard error of the complex mean."""
    x = np.ascontiguousarray(samples, dtype=float).ravel()
    if x.size == 0:
        raise EmptySample("ecf needs at least one sample")
    ts = np.ascontiguousarray(np.atleast_1d(np.asarray(t_grid, dtype=float)).ravel())
    mc, ms, vc, vs = kernels.ecf_moments(x, ts)
    n = x.size
    ddof_scale = n / (n - 1) if n > 1 else 1.0
    se = np.sqrt((vc + vs) * ddof_scale / n)
    return EcfEstimate(ts, mc + 1j * ms, se, n)


def empirical_pmf(values, support):
    """Relative frequency of each integer in ``support``."""
    values = np.asarray(values)
    uniq, counts = np.unique(values, return_counts=True)
    lookup = dict(zip(uniq.tolist(), counts.tolist()))
    return np.array([lookup.get(int(k), 0) for k in np.asarray(support)]) / values.size
