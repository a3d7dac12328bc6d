"""Hot numeric kernels, each in a numba and a pure-numpy flavour.

The public names at the bottom of the module are bound to one flavour
according to :mod:`tanpick._accel`. Both flavours stay importable under
``_nb_*`` / ``_np_*`` so the benchmark and the parity tests can run them
side by side.

Random kernels never draw randomness themselves: they consume raw 64-bit
words produced by :class:`tanpick.sampling.RandomSource`. The uniform for a
Poisson inversion is the top 53 bits of one word; Rademacher signs are the
low bits of another. Integer outputs are therefore bit-identical across
backends, and so are the sample sums (the summation order is fixed).
"""

import numpy as np

from ._accel import USE_NUMBA, njit

_U53 = np.uint64(11)
_INV_2_53 = 1.0 / 9007199254740992.0
_ONE = np.uint64(1)
_ALL_ONES = np.uint64(0xFFFFFFFFFFFFFFFF)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)


# ---------------------------------------------------------------- cosine sums


@njit
def _nb_cos_dev_sum(locs, masses, ts):
    out = np.empty(ts.shape[0])
    for j in range(ts.shape[0]):
        half_t = 0.5 * ts[j]
        acc = 0.0
        for i in range(locs.shape[0]):
            s = np.sin(half_t * locs[i])
            acc -= 2.0 * masses[i] * s * s
        out[j] = acc
    return out


def _np_cos_dev_sum(locs, masses, ts):
    out = np.empty(ts.shape[0])
    for j in range(ts.shape[0]):
        s = np.sin(0.5 * ts[j] * locs)
        out[j] = -2.0 * np.dot(masses, s * s)
    return out


@njit
def _nb_char_sums(locs, masses, ts):
    re = np.empty(ts.shape[0])
    im = np.empty(ts.shape[0])
    for j in range(ts.shape[0]):
        a = 0.0
        b = 0.0
        for i in range(locs.shape[0]):
            arg = ts[j] * locs[i]
            a += masses[i] * np.cos(arg)
            b += masses[i] * np.sin(arg)
        re[j] = a
        im[j] = b
    return re, im


def _np_char_sums(locs, masses, ts):
    re = np.empty(ts.shape[0])
    im = np.empty(ts.shape[0])
    for j in range(ts.shape[0]):
        arg = ts[j] * locs
        re[j] = np.dot(masses, np.cos(arg))
        im[j] = np.dot(masses, np.sin(arg))
    return re, im


# ------------------------------------------------------------- Pick kernel


@njit
def _nb_pick_sum(locs, masses, zs):
    out = np.empty(zs.shape[0], dtype=np.complex128)
    for j in range(zs.shape[0]):
        z = zs[j]
        acc = 0.0 + 0.0j
        for i in range(locs.shape[0]):
            x = locs[i]
            acc += masses[i] * (1.0 + z * x) / (z - x)
        out[j] = acc
    return out


def _np_pick_sum(locs, masses, zs):
    out = np.empty(zs.shape[0], dtype=np.complex128)
    for j in range(zs.shape[0]):
        z = zs[j]
        out[j] = np.sum(masses * (1.0 + z * locs) / (z - locs))
    return out


# ---------------------------------------------------------- random kernels


@njit
def _nb_popcount(x):
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return (x * _H01) >> _S56


@njit
def _nb_inverse_cdf(word, cdf):
    u = np.float64(np.int64(word >> _U53)) * _INV_2_53
    k = 0
    n = cdf.shape[0]
    while k < n and u > cdf[k]:
        k += 1
    return k


@njit
def _nb_signed_block(uword, bword, cdf):
    # one compound-Poisson block: (count of +1, total count)
    n2 = _nb_inverse_cdf(uword, cdf)
    if n2 >= 64:
        mask = _ALL_ONES
    else:
        mask = (_ONE << np.uint64(n2)) - _ONE
    return np.int64(_nb_popcount(bword & mask)), n2


@njit
def _nb_poisson_from_words(words, cdf):
    out = np.empty(words.shape[0], dtype=np.int64)
    for i in range(words.shape[0]):
        out[i] = _nb_inverse_cdf(words[i], cdf)
    return out


@njit
def _nb_rademacher_blocks(words, cdf):
    n = words.shape[0] // 2
    plus = np.empty(n, dtype=np.int64)
    total = np.empty(n, dtype=np.int64)
    for i in range(n):
        p, t = _nb_signed_block(words[2 * i], words[2 * i + 1], cdf)
        plus[i] = p
        total[i] = t
    return plus, total


@njit
def _nb_series_sum(words, cdf, coeffs):
    nblocks = coeffs.shape[0]
    n = words.shape[0] // (2 * nblocks)
    out = np.empty(n)
    pos = 0
    for i in range(n):
        acc = 0.0
        for j in range(nblocks):
            p, t = _nb_signed_block(words[pos], words[pos + 1], cdf)
            pos += 2
            acc += coeffs[j] * np.float64(2 * p - t)
        out[i] = acc
    return out


@njit
def _nb_signs_from_words(words, n):
    out = np.empty(n, dtype=np.int8)
    for i in range(n):
        bit = (words[i >> 6] >> np.uint64(i & 63)) & _ONE
        out[i] = 1 if bit == _ONE else -1
    return out


def _np_poisson_from_words(words, cdf):
    u = (words >> _U53).astype(np.float64) * _INV_2_53
    return np.searchsorted(cdf, u, side="left").astype(np.int64)


def _np_rademacher_blocks(words, cdf):
    uw = words[0::2]
    bw = words[1::2]
    total = _np_poisson_from_words(uw, cdf)
    shift = np.minimum(total, 63).astype(np.uint64)
    mask = np.where(total >= 64, _ALL_ONES, (_ONE << shift) - _ONE)
    plus = np.bitwise_count(bw & mask).astype(np.int64)
    return plus, total


def _np_series_sum(words, cdf, coeffs):
    nblocks = coeffs.shape[0]
    plus, total = _np_rademacher_blocks(words, cdf)
    y = (2 * plus - total).reshape(-1, nblocks).astype(np.float64)
    out = np.zeros(y.shape[0])
    for j in range(nblocks):
        out += coeffs[j] * y[:, j]
    return out


def _np_signs_from_words(words, n):
    raw = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[:n]
    return (2 * bits.astype(np.int8) - 1).astype(np.int8)


# -------------------------------------------------------------------- ECF


@njit
def _nb_ecf_moments(samples, ts):
    m = ts.shape[0]
    n = samples.shape[0]
    mc = np.empty(m)
    ms = np.empty(m)
    vc = np.empty(m)
    vs = np.empty(m)
    for j in range(m):
        sc = 0.0
        ss = 0.0
        qc = 0.0
        qs = 0.0
        for i in range(n):
            arg = ts[j] * samples[i]
            c = np.cos(arg)
            s = np.sin(arg)
            sc += c
            ss += s
            qc += c * c
            qs += s * s
        mc[j] = sc / n
        ms[j] = ss / n
        vc[j] = max(qc / n - mc[j] * mc[j], 0.0)
        vs[j] = max(qs / n - ms[j] * ms[j], 0.0)
    return mc, ms, vc, vs


def _np_ecf_moments(samples, ts):
    m = ts.shape[0]
    mc = np.empty(m)
    ms = np.empty(m)
    vc = np.empty(m)
    vs = np.empty(m)
    for j in range(m):
        arg = ts[j] * samples
        c = np.cos(arg)
        s = np.sin(arg)
        mc[j] = c.mean()
        ms[j] = s.mean()
        vc[j] = c.var()
        vs[j] = s.var()
    return mc, ms, vc, vs


if USE_NUMBA:
    cos_dev_sum = _nb_cos_dev_sum
    char_sums = _nb_char_sums
    pick_sum = _nb_pick_sum
    poisson_from_words = _nb_poisson_from_words
    rademacher_blocks = _nb_rademacher_blocks
    series_sum = _nb_series_sum
    signs_from_words = _nb_signs_from_words
    ecf_moments = _nb_ecf_moments
else:
    cos_dev_sum = _np_cos_dev_sum
    char_sums = _np_char_sums
    pick_sum = _np_pick_sum
    poisson_from_words = _np_poisson_from_words
    rademacher_blocks = _np_rademacher_blocks
    series_sum = _np_series_sum
    signs_from_words = _np_signs_from_words
    ecf_moments = _np_ecf_moments

KERNELS = (
    "cos_dev_sum",
    "char_sums",
    "pick_sum",
    "poisson_from_words",
    "rademacher_blocks",
    "series_sum",
    "signs_from_words",
    "ecf_moments",
)


def flavours(name):
    """Return ``(numba_kernel_or_None, numpy_kernel)`` for a kernel name."""
    if name not in KERNELS:
        raise KeyError(name)
    return globals()["_nb_" + name], globals()["_np_" + name]
