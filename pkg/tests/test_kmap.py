import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest
from scipy import integrate

from tanpick import (
    Divergent,
    DomainError,
    QuadratureSpec,
    TruncationSpec,
    counterpart_triple,
    eq6_lhs,
    eq6_middle,
    eq7_lhs,
    k_exponent,
    laplace_numeric,
    levy_exponent,
)

T_POS = [0.25, 0.5, 1.0, 2.0, 4.0]


class TestLaplace:
    @pytest.mark.parametrize("w", [0.5, 1.0, 3.0])
    def test_constant(self, w):
        for quad in (QuadratureSpec(), QuadratureSpec.for_laplace(w)):
            assert laplace_numeric(lambda x: np.ones_like(np.asarray(x, float)), w, quad).value == pytest.approx(1 / w, rel=1e-12)

    @pytest.mark.parametrize("w", [0.5, 2.0])
    def test_cosine(self, w):
        # int cos(a x) e^{-w x} dx = w / (w^2 + a^2)
        a = 1.7
        got = laplace_numeric(lambda x: math.cos(a * x), w).value
        assert got == pytest.approx(w / (w * w + a * a), abs=1e-10)

    def test_polynomial_exact_with_laguerre(self):
        # int x^5 e^{-2x} dx = 5! / 2^6
        got = laplace_numeric(lambda x: x**5, 2.0, QuadratureSpec()).value
        assert got == pytest.approx(120 / 64, rel=1e-12)

    def test_tail_estimate_small(self):
        val = laplace_numeric(lambda x: math.cos(x), 1.0)
        assert val.tail_bound < 1e-15

    def test_divergent(self):
        with pytest.raises(Divergent):
            laplace_numeric(math.cosh, 0.5)

    def test_divergent_growth(self):
        with pytest.raises(Divergent):
            laplace_numeric(lambda x: math.exp(2 * x), 1.0)

    @pytest.mark.parametrize("w", [0.0, -1.0])
    def test_domain(self, w):
        with pytest.raises(DomainError):
            laplace_numeric(math.cos, w)

    def test_bad_spec(self):
        with pytest.raises(ValueError):
            QuadratureSpec("simpson")
        with pytest.raises(ValueError):
            QuadratureSpec(node_count=4)


class TestKExponent:
    @pytest.mark.parametrize("t", T_POS)
    def test_closed_form(self, t):
        assert abs(k_exponent(t) + t * math.tanh(t)) < 1e-6

    @pytest.mark.parametrize("t", T_POS)
    def test_even(self, t):
        assert k_exponent(-t) == pytest.approx(k_exponent(t), abs=1e-14)

    def test_zero(self):
        assert k_exponent(0.0) == 0.0

    def test_against_adaptive_oracle(self):
        # same integral by QUADPACK, independent of Gauss-Laguerre nodes
        trunc = TruncationSpec(2000)
        triple = counterpart_triple(trunc)
        t = 1.0
        ref, _ = integrate.quad(lambda s: levy_exponent(triple, s * t).real * math.exp(-s), 0, 60, limit=400)
        assert k_exponent(t, trunc) == pytest.approx(ref, abs=1e-8)

    def test_rejects_adaptive(self):
        with pytest.raises(ValueError):
            k_exponent(1.0, quad=QuadratureSpec("adaptive"))

    @given(st.floats(0.05, 3.0))
    @settings(max_examples=15, deadline=None)
    def test_random_t(self, t):
        assert abs(k_exponent(t, TruncationSpec(10_000)) + t * math.tanh(t)) < 1e-6


class TestEq6:
    @pytest.mark.parametrize("t", T_POS)
    def test_chain(self, t):
        rhs = -1j * math.tanh(1 / t)
        lap = eq6_lhs(t)
        mid = eq6_middle(t)
        assert abs(lap - rhs) < 1e-5
        assert abs(mid - rhs) < 1e-5
        assert abs(lap - mid) < 1e-5

    def test_purely_imaginary(self):
        assert eq6_lhs(1.0).real == 0.0
        assert eq6_middle(1.0).real == 0.0

    def test_odd(self):
        assert eq6_lhs(-0.5) == pytest.approx(-eq6_lhs(0.5), abs=1e-14)
        assert eq6_middle(-0.5) == pytest.approx(-eq6_middle(0.5), abs=1e-14)

    def test_zero(self):
        with pytest.raises(DomainError):
            eq6_lhs(0.0)
        with pytest.raises(DomainError):
            eq6_middle(0.0)


class TestEq7:
    @pytest.mark.parametrize("w", [1.25, 2.0, 5.0])
    def test_closed_form(self, w):
        assert abs(eq7_lhs(w) + math.tanh(1 / w)) < 1e-4

    @pytest.mark.parametrize("w", [10.0, 20.0, 40.0])
    def test_large_w_ratio(self, w):
        # tanh(1/w) ~ 1/w
        assert eq7_lhs(w) / (-1 / w) == pytest.approx(1.0, rel=0.02)

    @pytest.mark.parametrize("w", [1.0, 0.5, -2.0])
    def test_domain(self, w):
        with pytest.raises(DomainError):
            eq7_lhs(w)

    def test_rejects_laguerre(self):
        with pytest.raises(ValueError):
            eq7_lhs(2.0, quad=QuadratureSpec())

    def test_raw_truncation_less_accurate(self):
        raw = eq7_lhs(2.0, TruncationSpec(1000, False))
        cor = eq7_lhs(2.0, TruncationSpec(1000))
        exact = -math.tanh(0.5)
        assert abs(cor - exact) < abs(raw - exact) or abs(cor - exact) < 1e-10
