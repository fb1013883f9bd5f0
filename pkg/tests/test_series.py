from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extsq.polynomials import MultiPoly
from extsq.series import (
    TruncSeries1,
    TruncSeries2,
    product_of_inverse_linear_factors,
    series2_first_difference,
    series_first_difference,
)


def const(c, nvars=0):
    return MultiPoly.constant(nvars, c)


def series_from_scalars(values, nvars=0):
    return TruncSeries1(nvars, [const(v, nvars) for v in values])


@st.composite
def unit_series(draw, order=5):
    coeffs = [1] + [
        Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 4))) for _ in range(order)
    ]
    return series_from_scalars(coeffs)


class TestTruncSeries1:
    def test_unit(self):
        u = TruncSeries1.unit(2, 3)
        assert u.order == 3
        assert u.coeff(0) == 1
        assert all(u.coeff(l).is_zero for l in range(1, 4))

    def test_from_tpoly_truncates_and_pads(self):
        s = TruncSeries1.from_tpoly([MultiPoly.one(0), const(2)], 0, 4)
        assert [s.coeff(l) for l in range(5)] == [1, 2, 0, 0, 0]
        t = TruncSeries1.from_tpoly([MultiPoly.one(0), const(2), const(3)], 0, 1)
        assert t.order == 1 and t.coeff(1) == 2

    def test_geometric_inverse(self):
        # 1/(1 - 2t) = sum 2^l t^l
        s = series_from_scalars([1, -2, 0, 0, 0, 0])
        inv = s.inverse()
        assert [inv.coeff(l) for l in range(6)] == [1, 2, 4, 8, 16, 32]

    def test_inverse_requires_unit_constant(self):
        with pytest.raises(ValueError):
            series_from_scalars([2, 1]).inverse()
        with pytest.raises(ValueError):
            series_from_scalars([0, 1]).inverse()

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            series_from_scalars([1, 1]) + series_from_scalars([1, 1, 1])

    def test_nvars_mismatch(self):
        a = TruncSeries1.unit(1, 2)
        b = TruncSeries1.unit(2, 2)
        with pytest.raises(ValueError):
            a * b

    def test_product_truncated_cauchy(self):
        a = series_from_scalars([1, 1, 0])  # 1 + t
        b = series_from_scalars([1, -1, 0])  # 1 - t
        assert a * b == series_from_scalars([1, 0, -1])

    @settings(max_examples=40)
    @given(unit_series())
    def test_inverse_roundtrip(self, s):
        assert s * s.inverse() == TruncSeries1.unit(0, s.order)

    @settings(max_examples=30)
    @given(unit_series(order=4), unit_series(order=4))
    def test_inverse_is_multiplicative(self, a, b):
        assert (a * b).inverse() == a.inverse() * b.inverse()


class TestFirstDifference:
    def test_equal_series(self):
        a = series_from_scalars([1, 2, 3])
        assert series_first_difference(a, a) is None

    def test_reports_lowest_order(self):
        a = series_from_scalars([1, 2, 3, 4])
        b = series_from_scalars([1, 2, 5, 9])
        l, ca, cb = series_first_difference(a, b)
        assert l == 2
        assert ca == 3 and cb == 5


class TestProductOfInverseLinearFactors:
    def test_single_factor(self):
        x = MultiPoly.variable(1, 0)
        s = product_of_inverse_linear_factors([x], 1, 3)
        assert [s.coeff(l) for l in range(4)] == [1, x, x * x, x * x * x]

    def test_zero_factor_contributes_one(self):
        z = MultiPoly.zero(1)
        x = MultiPoly.variable(1, 0)
        with_zero = product_of_inverse_linear_factors([x, z], 1, 3)
        without = product_of_inverse_linear_factors([x], 1, 3)
        assert with_zero == without

    def test_two_factors_match_inverse_of_poly(self):
        """prod 1/(1 - m_i t) equals the series inverse of prod (1 - m_i t)."""
        x = MultiPoly.variable(2, 0)
        y = MultiPoly.variable(2, 1)
        lhs = product_of_inverse_linear_factors([x, y], 2, 5)
        one = MultiPoly.one(2)
        poly_coeffs = [one, -(x + y), x * y]
        rhs = TruncSeries1.from_tpoly(poly_coeffs, 2, 5).inverse()
        assert lhs == rhs

    def test_matches_successive_inverse_multiplications(self):
        x = MultiPoly.variable(1, 0)
        ms = [x, MultiPoly.constant(1, Fraction(2, 3)), MultiPoly.constant(1, -2)]
        lhs = product_of_inverse_linear_factors(ms, 1, 4)
        acc = TruncSeries1.unit(1, 4)
        for m in ms:
            factor = TruncSeries1.from_tpoly([MultiPoly.one(1), -m], 1, 4)
            acc = acc * factor.inverse()
        assert lhs == acc


class TestTruncSeries2:
    def test_unit(self):
        u = TruncSeries2.unit(1, (2, 3))
        assert u.orders == (2, 3)
        assert u.coeff(0, 0) == 1
        assert u.coeff(1, 2).is_zero

    def test_build_and_coeff(self):
        s = TruncSeries2.build(0, (1, 1), lambda i, j: const(10 * i + j))
        assert s.coeff(1, 1) == 11

    def test_from_t1_from_t2(self):
        base = series_from_scalars([1, 5, 7])
        s1 = TruncSeries2.from_t1(base, 2)
        assert s1.coeff(1, 0) == 5 and s1.coeff(1, 1).is_zero
        s2 = TruncSeries2.from_t2(base, 2)
        assert s2.coeff(0, 1) == 5 and s2.coeff(1, 1).is_zero

    def test_product_separates(self):
        a = series_from_scalars([1, 2, 4])
        b = series_from_scalars([1, 3, 9])
        prod = TruncSeries2.from_t1(a, 2) * TruncSeries2.from_t2(b, 2)
        for i in range(3):
            for j in range(3):
                assert prod.coeff(i, j) == 2**i * 3**j

    def test_orders_mismatch(self):
        with pytest.raises(ValueError):
            TruncSeries2.unit(0, (1, 2)) + TruncSeries2.unit(0, (2, 1))

    def test_inverse_requires_unit_constant(self):
        grid = [[const(2), const(0)], [const(0), const(0)]]
        with pytest.raises(ValueError):
            TruncSeries2(0, grid).inverse()

    def test_inverse_roundtrip(self):
        s = TruncSeries2.build(
            0, (3, 3), lambda i, j: const(1 if (i, j) == (0, 0) else Fraction(i - j, i + j + 1))
        )
        assert s * s.inverse() == TruncSeries2.unit(0, (3, 3))

    def test_inverse_of_separable_product(self):
        a = series_from_scalars([1, 2, 4, 8])
        b = series_from_scalars([1, -1, 1, -1])
        prod = TruncSeries2.from_t1(a, 3) * TruncSeries2.from_t2(b, 3)
        expected = TruncSeries2.from_t1(a.inverse(), 3) * TruncSeries2.from_t2(b.inverse(), 3)
        assert prod.inverse() == expected


class TestSeries2FirstDifference:
    def test_equal(self):
        s = TruncSeries2.unit(0, (2, 2))
        assert series2_first_difference(s, s) is None

    def test_graded_order(self):
        """The reported cell is minimal in (i+j, i) order."""
        a = TruncSeries2.unit(0, (2, 2))
        grid = [[a.coeff(i, j) for j in range(3)] for i in range(3)]
        grid[1][1] = const(4)
        grid[0][2] = const(9)
        b = TruncSeries2(0, grid)
        (i, j), ca, cb = series2_first_difference(a, b)
        assert (i, j) == (0, 2)
        assert ca == 0 and cb == 9
