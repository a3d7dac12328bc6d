"""Time every hot kernel in its numba and pure-numpy flavour.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--scale 1.0] [--kernel NAME ...]

Both flavours are called on the same inputs. The numba kernel is called once
before timing so compilation (or the cache load) is excluded. Each row shows
the best of ``--repeat`` runs and whether the outputs agree.
"""

import argparse
import time

import numpy as np

from tanpick import RandomSource, TruncationSpec, build_m, kernels
from tanpick._accel import HAVE_NUMBA
from tanpick.sampling import _block_cdf, poisson_cdf_table, series_coefficients


def make_inputs(scale):
    def n(x):
        return max(1, int(x * scale))

    m = build_m(TruncationSpec(n(100_000), False))
    loc, mass = m.locations, m.masses
    words = RandomSource(1).words(2 * n(1_000_000))
    coeffs = series_coefficients(TruncationSpec(200, False))
    x_words = RandomSource(2).words(2 * 200 * n(20_000))
    samples = np.random.default_rng(0).normal(size=n(1_000_000))
    return {
        "cos_dev_sum": (loc, mass, np.linspace(0.1, 20.0, 32)),
        "char_sums": (loc, mass, np.linspace(0.1, 20.0, 32)),
        "pick_sum": (loc, mass, np.array([1j, 0.5 + 0.5j, -2.0 + 0.3j, 4j])),
        "poisson_from_words": (words, poisson_cdf_table(1.0)),
        "rademacher_blocks": (words, _block_cdf()),
        "series_sum": (x_words, _block_cdf(), coeffs),
        "signs_from_words": (words, 64 * words.size),
        "ecf_moments": (samples, np.linspace(-5.0, 5.0, 21)),
    }


def best_time(func, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = func(*args)
        times.append(time.perf_counter() - start)
    return min(times), out


def agree(a, b):
    if isinstance(a, tuple):
        return all(agree(x, y) for x, y in zip(a, b))
    if np.issubdtype(np.asarray(a).dtype, np.integer):
        return np.array_equal(a, b)
    return np.allclose(a, b, rtol=1e-10, atol=1e-12)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--scale", type=float, default=1.0, help="multiply every input size")
    p.add_argument("--kernel", nargs="*", choices=kernels.KERNELS)
    args = p.parse_args(argv)

    inputs = make_inputs(args.scale)
    names = args.kernel or kernels.KERNELS
    print(f"{'kernel':20s} {'numpy [s]':>11s} {'numba [s]':>11s} {'speedup':>8s}  agree")
    for name in names:
        nb, ref = kernels.flavours(name)
        t_np, out_np = best_time(ref, inputs[name], args.repeat)
        if HAVE_NUMBA:
            nb(*inputs[name])
            t_nb, out_nb = best_time(nb, inputs[name], args.repeat)
            print(f"{name:20s} {t_np:11.4f} {t_nb:11.4f} {t_np / t_nb:8.2f}  {agree(out_nb, out_np)}")
        else:
            print(f"{name:20s} {t_np:11.4f} {'-':>11s} {'-':>8s}  -")


if __name__ == "__main__":
    main()
