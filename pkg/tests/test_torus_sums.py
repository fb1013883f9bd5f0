import random
from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extsq.lfactors import LFactor, SatakeParams, formal_ext_sq_L, standard_L
from extsq.polynomials import MultiPoly
from extsq.series import (
    TruncSeries2,
    series2_first_difference,
    series_first_difference,
)
from extsq.symmetric import schur_eval_padded
from extsq.torus_sums import (
    bf_odd_correction_probe,
    bf_series,
    delta_half_exponent,
    js_even_series,
    js_odd_series,
    whittaker_value,
)


def product_series2(params, l1, l2):
    return TruncSeries2.from_t1(standard_L(params).series(l1), l2) * TruncSeries2.from_t2(
        formal_ext_sq_L(params).series(l2), l1
    )


class TestDeltaHalfExponent:
    def test_known_values(self):
        # GL2: delta^(1/2)(diag(pi, 1)) = q^(-1/2)
        assert delta_half_exponent((1, 0), 2) == -1
        # central elements have |det|-normalized delta = 1
        assert delta_half_exponent((1, 1), 2) == 0
        assert delta_half_exponent((1, 1, 1), 3) == 0

    def test_length_check(self):
        with pytest.raises(ValueError):
            delta_half_exponent((1, 0), 3)

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=8))
    def test_linear(self, g):
        n = len(g)
        doubled = [2 * x for x in g]
        assert delta_half_exponent(doubled, n) == 2 * delta_half_exponent(g, n)

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=8))
    def test_pair_doubling_quadruples(self, g):
        """Repeating every exponent twice (rank n -> 2n) multiplies e by 4."""
        n = len(g)
        rep = [x for x in g for _ in range(2)]
        assert delta_half_exponent(rep, 2 * n) == 4 * delta_half_exponent(g, n)


class TestWhittakerValue:
    def test_non_dominant_is_zero(self):
        p = SatakeParams.symbolic(3)
        assert whittaker_value((1, 2, 0), p).is_zero

    def test_negative_last_exponent_rejected(self):
        p = SatakeParams.symbolic(2)
        with pytest.raises(ValueError):
            whittaker_value((0, -1), p)

    def test_length_mismatch(self):
        p = SatakeParams.symbolic(2)
        with pytest.raises(ValueError):
            whittaker_value((1, 0, 0), p)

    def test_dominant_value(self):
        p = SatakeParams.symbolic(3)
        v = whittaker_value((2, 1, 0), p)
        assert v.q_half_exponent == delta_half_exponent((2, 1, 0), 3)
        assert v.coefficient == schur_eval_padded((2, 1, 0), p.entries)

    def test_zero_entry_can_kill_value(self):
        p = SatakeParams.parse(["sym", "0"])
        assert whittaker_value((1, 1), p).is_zero
        assert not whittaker_value((1, 0), p).is_zero


class TestJsSeries:
    @pytest.mark.parametrize("n,order", [(3, 6), (5, 5)])
    def test_odd_symbolic(self, n, order):
        p = SatakeParams.symbolic(n)
        lhs = js_odd_series(p, order)
        rhs = formal_ext_sq_L(p).series(order)
        assert series_first_difference(lhs, rhs) is None

    @pytest.mark.parametrize("tokens", [["sym", "sym", "sym", "0"], ["sym", "0"], ["sym", "sym", "0", "0"]])
    def test_even_with_zero(self, tokens):
        p = SatakeParams.parse(tokens)
        lhs = js_even_series(p, 6)
        rhs = formal_ext_sq_L(p).series(6)
        assert series_first_difference(lhs, rhs) is None

    def test_even_all_nonzero_differs_by_central_product(self):
        """For all-nonzero even rank the sum picks up the extra pair at t^m...

        Concretely at n=4 the first discrepancy sits at t^2 and equals the
        product of all four entries (the shape (1,1,1,1) the padded sum was
        built to exclude).
        """
        p = SatakeParams.symbolic(4)
        lhs = js_even_series(p, 4)
        rhs = formal_ext_sq_L(p).series(4)
        diff = series_first_difference(lhs, rhs)
        assert diff is not None
        l, ca, cb = diff
        assert l == 2
        omega = reduce(lambda a, b: a * b, p.entries)
        assert cb - ca == omega

    def test_parity_validation(self):
        p3 = SatakeParams.symbolic(3)
        p4 = SatakeParams.symbolic(4)
        with pytest.raises(ValueError):
            js_even_series(p3, 3)
        with pytest.raises(ValueError):
            js_odd_series(p4, 3)

    def test_rational_entries(self):
        p = SatakeParams.parse(["1/2", "-3", "2/5"])
        lhs = js_odd_series(p, 8)
        rhs = formal_ext_sq_L(p).series(8)
        assert series_first_difference(lhs, rhs) is None

    def test_at_most_one_nonzero_entry_gives_unit(self):
        rng = random.Random(20)
        for _ in range(30):
            n = rng.randrange(2, 7)
            toks = ["0"] * n
            if rng.random() < 0.8:
                toks[rng.randrange(n)] = str(Fraction(rng.randrange(-8, 9) or 1, rng.randrange(1, 7)))
            p = SatakeParams.parse(toks)
            assert formal_ext_sq_L(p) == LFactor.one(p.nvars)
            sum_fn = js_even_series if n % 2 == 0 else js_odd_series
            s = sum_fn(p, 5)
            assert s.coeff(0) == 1
            assert all(s.coeff(l).is_zero for l in range(1, 6))


class TestBfSeries:
    def test_even_symbolic_with_central_factor(self):
        p = SatakeParams.symbolic(4)
        lhs = bf_series(p, 4, 4)
        omega = reduce(lambda a, b: a * b, p.entries)
        grid = [[MultiPoly.zero(4) for _ in range(5)] for _ in range(5)]
        grid[0][0] = MultiPoly.one(4)
        grid[0][2] = -omega
        expected = TruncSeries2(4, grid) * product_series2(p, 4, 4)
        assert series2_first_difference(lhs, expected) is None

    def test_even_with_zero_is_plain_product(self):
        p = SatakeParams.parse(["sym", "sym", "sym", "0"])
        assert series2_first_difference(bf_series(p, 4, 4), product_series2(p, 4, 4)) is None

    def test_odd_with_zero_is_plain_product(self):
        p = SatakeParams.parse(["sym", "sym", "0"])
        assert series2_first_difference(bf_series(p, 4, 4), product_series2(p, 4, 4)) is None

    def test_n2_small_window(self):
        p = SatakeParams.symbolic(2)
        lhs = bf_series(p, 3, 3)
        omega = p.entries[0] * p.entries[1]
        grid = [[MultiPoly.zero(2) for _ in range(4)] for _ in range(4)]
        grid[0][0] = MultiPoly.one(2)
        grid[0][1] = -omega
        expected = TruncSeries2(2, grid) * product_series2(p, 3, 3)
        assert series2_first_difference(lhs, expected) is None

    def test_needs_two_entries(self):
        with pytest.raises(ValueError):
            bf_series(SatakeParams.parse(["sym"]), 2, 2)


class TestBfOddProbe:
    def test_zero_entry_correction_is_one(self):
        p = SatakeParams.parse(["sym", "sym", "0"])
        probe = bf_odd_correction_probe(p, 4, 4)
        assert probe.conductor_hypothesis
        assert probe.matches_product
        assert probe.correction == TruncSeries2.unit(p.nvars, (4, 4))

    def test_all_nonzero_reports_nontrivial_correction(self):
        p = SatakeParams.symbolic(3)
        probe = bf_odd_correction_probe(p, 3, 3)
        assert not probe.conductor_hypothesis
        assert not probe.matches_product
        assert probe.correction.coeff(0, 0) == 1

    def test_rational_zero_entry(self):
        p = SatakeParams.parse(["3/4", "-2", "0", "1/6", "5"])
        probe = bf_odd_correction_probe(p, 3, 3)
        assert probe.conductor_hypothesis and probe.matches_product

    def test_even_rejected(self):
        with pytest.raises(ValueError):
            bf_odd_correction_probe(SatakeParams.symbolic(4), 2, 2)
