"""The numba and numpy flavours of every kernel must agree."""

import os
import subprocess
import sys

import numpy as np
import pytest

from tanpick import RandomSource, TruncationSpec
from tanpick import kernels
from tanpick._accel import HAVE_NUMBA
from tanpick.sampling import _block_cdf, poisson_cdf_table, series_coefficients

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")


def both(name):
    nb, np_ = kernels.flavours(name)
    return nb, np_


@pytest.fixture
def words():
    return RandomSource(123, 9).words(20_000)


@needs_numba
class TestParity:
    def test_cos_dev_sum(self):
        nb, ref = both("cos_dev_sum")
        locs = np.linspace(-0.6, 0.6, 101)
        masses = np.linspace(0.1, 1.0, 101)
        ts = np.linspace(-10, 10, 13)
        np.testing.assert_allclose(nb(locs, masses, ts), ref(locs, masses, ts), rtol=1e-13, atol=1e-14)

    def test_char_sums(self):
        nb, ref = both("char_sums")
        locs = np.linspace(-2, 3, 57)
        masses = np.ones(57)
        ts = np.array([0.0, 0.5, 4.0])
        for a, b in zip(nb(locs, masses, ts), ref(locs, masses, ts)):
            np.testing.assert_allclose(a, b, rtol=1e-13, atol=1e-13)

    def test_pick_sum(self):
        nb, ref = both("pick_sum")
        locs = np.linspace(-0.6, 0.6, 99)
        masses = np.full(99, 0.01)
        zs = np.array([1j, 0.3 + 0.2j, -2 - 1j])
        np.testing.assert_allclose(nb(locs, masses, zs), ref(locs, masses, zs), rtol=1e-13)

    def test_poisson(self, words):
        nb, ref = both("poisson_from_words")
        cdf = poisson_cdf_table(1.0)
        np.testing.assert_array_equal(nb(words, cdf), ref(words, cdf))

    def test_poisson_edge_words(self):
        nb, ref = both("poisson_from_words")
        cdf = poisson_cdf_table(2.0)
        w = np.array([0, 1, 2**11 - 1, 2**11, 2**63, 2**64 - 1], dtype=np.uint64)
        np.testing.assert_array_equal(nb(w, cdf), ref(w, cdf))

    def test_rademacher_blocks(self, words):
        nb, ref = both("rademacher_blocks")
        for a, b in zip(nb(words, _block_cdf()), ref(words, _block_cdf())):
            np.testing.assert_array_equal(a, b)

    def test_full_mask(self):
        # a cdf that always returns 64 exercises the all-ones mask
        nb, ref = both("rademacher_blocks")
        cdf = np.zeros(64)
        w = np.array([2**63, 2**64 - 1, 2**64 - 1, 0b1011], dtype=np.uint64)
        got_nb, got_np = nb(w, cdf), ref(w, cdf)
        for a, b in zip(got_nb, got_np):
            np.testing.assert_array_equal(a, b)
        assert list(got_np[0]) == [64, 3] and list(got_np[1]) == [64, 64]

    def test_series_sum(self, words):
        nb, ref = both("series_sum")
        coeffs = series_coefficients(TruncationSpec(20, False))
        np.testing.assert_array_equal(nb(words, _block_cdf(), coeffs), ref(words, _block_cdf(), coeffs))

    @pytest.mark.parametrize("n", [0, 1, 63, 64, 65, 1000])
    def test_signs(self, words, n):
        nb, ref = both("signs_from_words")
        np.testing.assert_array_equal(nb(words, n), ref(words, n))

    def test_ecf_moments(self):
        nb, ref = both("ecf_moments")
        x = np.random.default_rng(1).normal(size=10_000)
        ts = np.linspace(-3, 3, 7)
        for a, b in zip(nb(x, ts), ref(x, ts)):
            np.testing.assert_allclose(a, b, rtol=1e-10, atol=1e-13)


def test_signs_bit_order():
    _, ref = both("signs_from_words")
    w = np.array([0b101], dtype=np.uint64)
    np.testing.assert_array_equal(ref(w, 4), [1, -1, 1, -1])


def test_popcount_mask():
    _, ref = both("rademacher_blocks")
    # cdf forcing N_2 = 3: u > cdf[0..2] and u <= cdf[3]
    cdf = np.array([0.0, 0.0, 0.0, 1.0])
    w = np.array([2**63, 0b1111_0110], dtype=np.uint64)
    plus, total = ref(w, cdf)
    assert total[0] == 3 and plus[0] == 2


def test_flavours_unknown():
    with pytest.raises(KeyError):
        kernels.flavours("nope")


def test_env_flag_selects_numpy():
    code = "from tanpick import kernels, backend_name; print(backend_name(), kernels.pick_sum is kernels._np_pick_sum)"
    env = dict(os.environ, TANPICK_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split()[-1] == "True"


def test_backends_produce_identical_samples():
    code = (
        "from tanpick import RandomSource, sample_X; import sys;"
        "sys.stdout.write(sample_X(RandomSource(3), size=500).tobytes().hex())"
    )
    outs = []
    for flag in ("0", "1"):
        env = dict(os.environ, TANPICK_DISABLE_NUMBA=flag)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout)
    assert outs[0] == outs[1]


def test_benchmark_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    bench.main(["--repeat", "1", "--scale", "0.001"])
    out = capsys.readouterr().out
    assert "False" not in out
    assert len(out.splitlines()) == 1 + len(kernels.KERNELS)
