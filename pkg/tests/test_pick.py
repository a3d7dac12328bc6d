import cmath
import math

from hypothesis import given, settings, strategies as st
import mpmath
import numpy as np
import pytest

from tanpick import (
    DiscreteMeasure,
    PoleProximity,
    RandomSource,
    TruncationSpec,
    ZeroArgument,
    build_m,
    pick_eval,
    tan_reciprocal_oracle,
    upper_half_plane_check,
)
from tanpick.pick import admissible_points, kernel_terms

T_GRID = [-4.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 4.0]


def mp_tan_reciprocal(z):
    return complex(mpmath.tan(1 / mpmath.mpc(z.real, z.imag)))


class TestOracle:
    def test_real_point(self):
        assert tan_reciprocal_oracle(1.0) == pytest.approx(1.5574077246549023, rel=1e-15)

    def test_frozen_complex(self):
        got = tan_reciprocal_oracle(1 + 1j)
        assert got == pytest.approx(0.40389645531602574 - 0.5640831412674985j, rel=1e-14)

    @given(
        st.complex_numbers(min_magnitude=0.05, max_magnitude=50, allow_nan=False, allow_infinity=False)
    )
    @settings(max_examples=200, deadline=None)
    def test_matches_mpmath(self, z):
        try:
            got = tan_reciprocal_oracle(z)
        except PoleProximity:
            return
        assert got == pytest.approx(mp_tan_reciprocal(z), rel=1e-9, abs=1e-12)

    def test_large_imaginary_part(self):
        assert tan_reciprocal_oracle(1j / 50.0) == pytest.approx(-1j, abs=1e-15)
        assert tan_reciprocal_oracle(-1j / 50.0) == pytest.approx(1j, abs=1e-15)

    def test_pole(self):
        with pytest.raises(PoleProximity):
            tan_reciprocal_oracle(2 / math.pi)

    def test_zero(self):
        with pytest.raises(ZeroArgument):
            tan_reciprocal_oracle(0)

    def test_array_shape(self):
        z = np.array([[1 + 1j, 2j], [-1 + 0.5j, 3.0]])
        assert tan_reciprocal_oracle(z).shape == (2, 2)


class TestImaginaryAxis:
    @pytest.mark.parametrize("t", T_GRID)
    def test_matches_tanh(self, m_big, t):
        got = pick_eval(m_big, 1j * t)
        assert abs(got - (-1j * math.tanh(1 / t))) < 1e-6

    @pytest.mark.parametrize("t", T_GRID)
    def test_real_part_vanishes(self, m_big, t):
        assert abs(pick_eval(m_big, 1j * t).real) < 1e-12

    def test_corrected_beats_raw(self, m_big, m_big_raw):
        exact = -1j * math.tanh(1.0)
        assert abs(pick_eval(m_big, 1j) - exact) < abs(pick_eval(m_big_raw, 1j) - exact)

    def test_raw_error_bounded_by_missing_mass(self, m_big_raw, tanh1):
        # at z = i every kernel term has modulus exactly its mass
        err = abs(pick_eval(m_big_raw, 1j) - (-1j * math.tanh(1.0)))
        assert err <= tanh1 - m_big_raw.total_mass() + 1e-15


class TestComplexGrid:
    def test_corollary(self, m_big):
        zs = admissible_points(RandomSource(7), 200)
        assert np.all(np.abs(zs.imag) >= 0.2)
        err = np.abs(pick_eval(m_big, zs) - tan_reciprocal_oracle(zs))
        assert err.max() < 1e-3

    def test_corollary_against_mpmath(self, m_big):
        zs = admissible_points(RandomSource(11), 20)
        got = pick_eval(m_big, zs)
        for z, g in zip(zs, got):
            assert abs(g - mp_tan_reciprocal(z)) < 1e-8

    def test_conjugate_symmetry(self, m_big):
        z = 0.7 + 0.4j
        assert pick_eval(m_big, z.conjugate()) == pytest.approx(pick_eval(m_big, z).conjugate(), abs=1e-14)

    def test_oddness(self, m_big):
        z = 0.7 + 0.4j
        assert pick_eval(m_big, -z) == pytest.approx(-pick_eval(m_big, z), abs=1e-12)

    def test_reflection(self, m_big):
        for z in (0.7 + 0.4j, -1.5 + 2j):
            assert pick_eval(m_big, -z.conjugate()) == pytest.approx(-pick_eval(m_big, z).conjugate(), abs=1e-12)

    def test_real_axis_between_atoms(self, m_big):
        # 1 / 1.0 is not a pole of tan, and z = 1 sits right of every atom
        assert pick_eval(m_big, 1.0) == pytest.approx(math.tan(1.0), abs=1e-8)


class TestSignProperty:
    def test_each_term_lower(self):
        m = build_m(TruncationSpec(50, False))
        for z in (0.3 + 0.2j, -2 + 1e-3j, 5j, 1e-3 + 1e-3j):
            assert np.all(kernel_terms(m, z).imag <= 0)

    def test_kernel_imag_formula(self):
        # Im (1 + z x)/(z - x) = -(1 + x^2) Im z / |z - x|^2
        x, z = 0.4, 1.3 + 0.7j
        expected = -(1 + x * x) * z.imag / abs(z - x) ** 2
        m = DiscreteMeasure.from_atoms([(x, 1.0)])
        assert kernel_terms(m, z)[0].imag == pytest.approx(expected, rel=1e-15)

    def test_grid(self, m_big):
        for z in admissible_points(RandomSource(3), 200):
            if z.imag > 0:
                assert upper_half_plane_check(m_big, z)

    def test_negated_is_herglotz_against_oracle(self):
        # -tan(1/z) maps the upper half-plane into itself
        zs = admissible_points(RandomSource(5), 100)
        up = zs[zs.imag > 0]
        assert np.all((-tan_reciprocal_oracle(up)).imag > 0)

    def test_rejects_lower_half_plane(self, m_big):
        with pytest.raises(ValueError):
            upper_half_plane_check(m_big, 1 - 1j)


class TestErrors:
    def test_zero(self, m_big):
        with pytest.raises(ZeroArgument):
            pick_eval(m_big, 0)

    def test_on_atom(self):
        m = build_m(TruncationSpec(10, False))
        with pytest.raises(PoleProximity):
            pick_eval(m, 2 / math.pi + 1e-9)

    def test_near_atom_off_axis_ok(self):
        m = build_m(TruncationSpec(10, False))
        assert cmath.isfinite(pick_eval(m, 2 / math.pi + 1e-3j))

    def test_accumulation_segment(self, m_big):
        with pytest.raises(PoleProximity):
            pick_eval(m_big, 1e-7)

    def test_accumulation_segment_raw_allowed_between_atoms(self):
        m = build_m(TruncationSpec(10, False))
        assert cmath.isfinite(pick_eval(m, 1e-3))


def test_admissible_points_deterministic():
    a = admissible_points(RandomSource(1), 50)
    b = admissible_points(RandomSource(1), 50)
    np.testing.assert_array_equal(a, b)
    assert np.all((np.abs(a) >= 0.2 - 1e-15) & (np.abs(a) <= 5 + 1e-15))
