"""Univariate Bernstein machinery: conversions, transform, elevation, enclosure."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from berncert import (
    BasisConvention,
    BernsteinForm1D,
    InconclusiveError,
    NotPositiveError,
    UPoly,
    certify_positive_1d,
    elevate,
    from_bernstein,
    goursat,
    goursat_coefficients,
    powers_reznick_degree,
    range_enclosure_1d,
    to_bernstein_plain,
)

from corpus import random_unit_fraction, random_upoly

fractions_st = st.fractions(min_value=-5, max_value=5, max_denominator=12)
upolys_st = st.lists(fractions_st, min_size=1, max_size=9).map(UPoly)


def _sympy_expand_plain(coeffs, m):
    """Independent expansion of a plain Bernstein form via sympy."""
    x = sympy.Symbol("x")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * x**i * (1 - x) ** (m - i)
        for i, c in enumerate(coeffs)
    )
    poly = sympy.Poly(sympy.expand(expr), x)
    out = [Fraction(0)] * (poly.degree() + 1)
    for (power,), coeff in poly.terms():
        out[power] = Fraction(int(coeff.p), int(coeff.q))
    return UPoly(out)


class TestToBernstein:
    def test_constant_at_degree_two(self):
        assert to_bernstein_plain(UPoly([1]), 2).coeffs == (1, 2, 1)

    def test_x_at_degree_two(self):
        assert to_bernstein_plain(UPoly([0, 1]), 2).coeffs == (0, 1, 1)

    def test_basis_element(self):
        assert to_bernstein_plain(UPoly([1, -1]), 1).coeffs == (1, 0)

    def test_degree_error(self):
        from berncert import DegreeError

        with pytest.raises(DegreeError):
            to_bernstein_plain(UPoly([0, 0, 1]), 1)

    def test_against_sympy_expansion(self):
        rng = random.Random(11)
        for _ in range(5):
            p = random_upoly(rng, max_degree=5)
            m = p.degree + rng.randint(0, 3)
            form = to_bernstein_plain(p, m)
            assert _sympy_expand_plain(form.coeffs, m) == p

    @given(upolys_st, st.integers(0, 4))
    @settings(deadline=None)
    def test_roundtrip_identity(self, p, extra):
        m = p.degree + extra
        assert from_bernstein(to_bernstein_plain(p, m)) == p


class TestFromBernstein:
    def test_plain_examples(self):
        assert from_bernstein(
            BernsteinForm1D(2, (1, 2, 1), BasisConvention.PLAIN)
        ) == UPoly([1])
        assert from_bernstein(
            BernsteinForm1D(2, (0, 1, 1), BasisConvention.PLAIN)
        ) == UPoly([0, 1])

    def test_normalized_example(self):
        assert from_bernstein(
            BernsteinForm1D(2, (0, 0, 1), BasisConvention.NORMALIZED)
        ) == UPoly([0, 0, 1])

    def test_convention_conversion(self):
        form = BernsteinForm1D(3, (3, 9, 9, 3), BasisConvention.PLAIN)
        normalized = form.to_normalized()
        assert normalized.coeffs == (3, 3, 3, 3)
        assert normalized.to_plain() == form


class TestGoursat:
    def test_constant(self):
        assert goursat(UPoly([1])) == UPoly([1])

    def test_x(self):
        assert goursat(UPoly([0, 1])) == UPoly([2, -2])

    def test_one_plus_x_full_vector(self):
        assert goursat_coefficients(UPoly([1, 1])) == (2, 0)
        assert goursat(UPoly([1, 1])) == UPoly([2])

    def test_declared_degree_padding(self):
        # Padding to degree n scales the transform by (2x)**(n - deg).
        p = UPoly([1, 1])
        padded = UPoly(goursat_coefficients(p, n=3))
        x = Fraction(2, 5)
        assert padded.eval(x) == (2 * x) ** 3 * p.eval((1 - x) / x)

    @given(upolys_st, st.fractions(min_value=0, max_value=1, max_denominator=40))
    @settings(deadline=None)
    def test_pointwise_identity(self, p, x):
        if x == 0:
            x = Fraction(1, 2)
        n = p.degree
        assert goursat(p).eval(x) == (2 * x) ** n * p.eval((1 - x) / x)


class TestPowersReznickDegree:
    def test_constant(self):
        assert powers_reznick_degree(0, 0, 1) == 1

    def test_one_plus_x(self):
        assert powers_reznick_degree(1, 2, 1) == 8

    def test_quadratic(self):
        assert powers_reznick_degree(2, 1, Fraction(1, 2)) == 23

    def test_exact_integer_quotient_rounds_up(self):
        # 2 * 1 * 3 / 1 = 6 exactly; ceiling keeps it at 6.
        assert powers_reznick_degree(1, 3, 1) == 3 + 6 + 1

    def test_nonpositive_lambda_rejected(self):
        with pytest.raises(ValueError):
            powers_reznick_degree(2, 1, 0)
        with pytest.raises(ValueError):
            powers_reznick_degree(2, 1, -1)


class TestElevate:
    def test_constant_reelevated(self):
        form = BernsteinForm1D(1, (1, 1), BasisConvention.PLAIN)
        assert elevate(form, 2).coeffs == (1, 2, 1)

    def test_x_elevated(self):
        form = BernsteinForm1D(2, (0, 1, 1), BasisConvention.PLAIN)
        lifted = elevate(form, 3)
        assert lifted.coeffs == (0, 1, 2, 1)
        assert from_bernstein(lifted) == UPoly([0, 1])

    def test_identity_case(self):
        form = BernsteinForm1D(2, (3, 5, 7), BasisConvention.PLAIN)
        assert elevate(form, 2) == form

    def test_lowering_rejected(self):
        from berncert import DegreeError

        form = BernsteinForm1D(2, (3, 5, 7), BasisConvention.PLAIN)
        with pytest.raises(DegreeError):
            elevate(form, 1)

    @given(upolys_st, st.integers(0, 5))
    @settings(deadline=None)
    def test_soundness(self, p, extra):
        form = to_bernstein_plain(p, p.degree)
        lifted = elevate(form, p.degree + extra)
        assert from_bernstein(lifted) == p

    @given(
        st.lists(
            st.fractions(min_value=0, max_value=5, max_denominator=8),
            min_size=2,
            max_size=7,
        ),
        st.integers(0, 6),
    )
    @settings(deadline=None)
    def test_elevation_positivity_bound(self, coeffs, extra):
        # Nonnegative coefficients with positive ends: after at least
        # doubling the degree, every coefficient is >= min of the ends.
        coeffs[0] += Fraction(1, 3)
        coeffs[-1] += Fraction(1, 7)
        q = len(coeffs) - 1
        form = BernsteinForm1D(q, tuple(coeffs), BasisConvention.PLAIN)
        q_star = 2 * q + extra
        lifted = elevate(form, q_star)
        floor = min(coeffs[0], coeffs[-1])
        assert all(c >= floor for c in lifted.coeffs)
        assert floor > 0


class TestRangeEnclosure:
    def test_x_is_exact_without_subdivision(self):
        enc = range_enclosure_1d(UPoly([0, 1]), max_width=Fraction(1, 100))
        assert enc.lo == 0 and enc.hi == 1
        assert enc.subdivisions == 0
        assert enc.min_value == 0 and enc.max_value == 1

    def test_one_plus_x_squared(self):
        enc = range_enclosure_1d(UPoly([1, 0, 1]), max_width=Fraction(1, 4))
        assert enc.lo >= 1 and enc.hi <= 2

    def test_hump_against_grid(self):
        p = UPoly([0, 1, -1])  # x(1-x), max 1/4 at 1/2
        enc = range_enclosure_1d(p, predicate=lambda e: e.subdivisions >= 1)
        assert enc.subdivisions >= 1
        assert enc.lo <= Fraction(1, 4) <= enc.hi
        assert enc.lo >= 0
        grid = [p.eval(Fraction(k, 100)) for k in range(101)]
        assert enc.lo <= min(grid) and max(grid) <= enc.hi

    def test_soundness_on_random_polynomials(self):
        rng = random.Random(23)
        for _ in range(10):
            p = random_upoly(rng, max_degree=6)
            enc = range_enclosure_1d(p, max_width=Fraction(1, 2))
            for _ in range(100):
                x = random_unit_fraction(rng)
                assert enc.lo <= p.eval(x) <= enc.hi

    def test_width_nonincreasing_in_subdivisions(self):
        p = UPoly([1, -6, 12, -6])
        widths = []
        for k in range(7):
            enc = range_enclosure_1d(p, predicate=lambda e, k=k: e.subdivisions >= k)
            widths.append(enc.hi - enc.lo)
        assert all(a >= b for a, b in zip(widths, widths[1:]))

    def test_inconclusive_reports_best(self):
        p = UPoly([0, 1]) - UPoly([Fraction(1, 3)])  # x - 1/3
        p = p * p  # zero exactly at 1/3, strictly positive nowhere certified
        with pytest.raises(InconclusiveError) as info:
            range_enclosure_1d(p, predicate=lambda e: e.lo > 0, max_levels=6)
        assert info.value.best is not None
        assert info.value.best.lo <= 0

    def test_requires_a_stopping_rule(self):
        with pytest.raises(ValueError):
            range_enclosure_1d(UPoly([1]))


class TestCertifyPositive1D:
    def test_constant(self):
        cert = certify_positive_1d(UPoly([1]))
        assert cert.q_star == 2
        assert cert.form.coeffs == (1, 2, 1)

    def test_one_plus_x_spot_values(self):
        cert = certify_positive_1d(UPoly([1, 1]))
        assert cert.q == 8
        assert cert.q_star == 16
        assert len(cert.form.coeffs) == 17
        assert all(c > 0 for c in cert.form.coeffs)
        assert from_bernstein(cert.form) == UPoly([1, 1])

    def test_x_refuted_at_left_endpoint(self):
        with pytest.raises(NotPositiveError) as info:
            certify_positive_1d(UPoly([0, 1]))
        assert info.value.witness == 0
        assert info.value.value == 0

    def test_interior_dyadic_zero_refuted(self):
        p = UPoly([Fraction(1, 4), -1, 1])  # (x - 1/2)**2
        with pytest.raises(NotPositiveError) as info:
            certify_positive_1d(p)
        assert info.value.witness == Fraction(1, 2)

    def test_negative_dip_refuted_with_witness(self):
        p = UPoly([Fraction(1, 16), -1, 1])  # min negative near 1/2
        with pytest.raises(NotPositiveError) as info:
            certify_positive_1d(p)
        w = info.value.witness
        assert p.eval(w) <= 0

    def test_nondyadic_zero_is_inconclusive(self):
        p = (UPoly([0, 1]) - UPoly([Fraction(1, 3)])) ** 2
        with pytest.raises(InconclusiveError):
            certify_positive_1d(p, max_levels=6)

    def test_lambda_bound_is_valid(self):
        rng = random.Random(5)
        p = UPoly([2, -1, Fraction(1, 2), Fraction(1, 3)])
        cert = certify_positive_1d(p)
        for _ in range(50):
            x = random_unit_fraction(rng)
            assert p.eval(x) >= cert.lambda_lower
