from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtangent.exact import LaurentPoly, RationalFunc
from qtangent.qseries import (
    QPochSpec,
    ZSeries,
    cos_q,
    q_bracket,
    q_factorial,
    q_pochhammer,
    qpoch,
    series_arith,
    series_div,
    sin_q,
    tan_q,
)


def q_(e, c=1):
    return LaurentPoly.q_power(e, c)


def classical_tan(order):
    """Maclaurin coefficients of tan by long division of Fraction series."""
    sin = [Fraction((-1) ** (m // 2), factorial(m)) if m % 2 else Fraction(0) for m in range(order)]
    cos = [Fraction((-1) ** (m // 2), factorial(m)) if m % 2 == 0 else Fraction(0) for m in range(order)]
    out = []
    for m in range(order):
        acc = sin[m] - sum(out[i] * cos[m - i] for i in range(m))
        out.append(acc / cos[0])
    return out


def test_classical_oracle_itself():
    assert classical_tan(8)[1::2] == [1, Fraction(1, 3), Fraction(2, 15), Fraction(17, 315)]


class TestQNumbers:
    def test_brackets(self):
        assert q_bracket(1) == LaurentPoly.one()
        assert q_bracket(3).terms == {0: 1, 2: 1, 4: 1}
        assert q_bracket(0).is_zero()
        with pytest.raises(ValueError):
            q_bracket(-1)

    def test_factorials(self):
        assert q_factorial(0) == LaurentPoly.one()
        assert q_factorial(2) == q_bracket(2)
        # (1+q)(1+q+q^2) by hand
        assert q_factorial(3).terms == {0: 1, 2: 2, 4: 2, 6: 1}
        with pytest.raises(ValueError):
            q_factorial(-2)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_bracket_matches_geometric_quotient(self, n):
        one_minus = LaurentPoly({0: 1, 2: -1})
        assert q_bracket(n) * one_minus == LaurentPoly.one() - q_(n)

    def test_pochhammer_empty(self):
        assert q_pochhammer(QPochSpec(1, 2, 4, 0)) == LaurentPoly.one()

    def test_pochhammer_vanishing_factor(self):
        # (q^(-2k+2); q^2)_1 at k = 1 is 1 - q^0
        assert q_pochhammer(QPochSpec(1, 0, 4, 1)).is_zero()

    def test_pochhammer_half_integer_argument(self):
        # (-q^(9/2-k); q^4)_1 at k = 2 is 1 + q^(5/2)
        assert q_pochhammer(QPochSpec(-1, 5, 8, 1)).terms == {0: 1, 5: 1}
        assert qpoch(Fraction(5, 2), 4, 1, sign=-1).terms == {0: 1, 5: 1}

    def test_pochhammer_spec_validation(self):
        with pytest.raises(ValueError):
            QPochSpec(1, 0, 3, 1)
        with pytest.raises(ValueError):
            QPochSpec(1, 0, 4, -1)
        with pytest.raises(ValueError):
            QPochSpec(2, 0, 4, 1)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_factorial_as_pochhammer(self, n):
        # [n]! (1-q)^n == (q; q)_n
        lhs = q_factorial(n) * LaurentPoly({0: 1, 2: -1}) ** n
        assert lhs == qpoch(1, 1, n)


class TestTrigSeries:
    def test_sin_examples(self):
        s = sin_q(6)
        assert s[1] == RationalFunc.one()
        assert s[3] == RationalFunc(q_(1, -1), q_factorial(3))
        assert s[5] == RationalFunc(q_(4), q_factorial(5))

    def test_cos_examples(self):
        c = cos_q(5)
        assert c[0] == RationalFunc.one()
        assert c[2] == RationalFunc(q_(1, -1), q_factorial(2))
        assert c[4] == RationalFunc(q_(4), q_factorial(4))

    @pytest.mark.parametrize("order", [1, 7, 14])
    def test_regeneration_and_parity(self, order):
        s, c = sin_q(order), cos_q(order)
        assert s.order == c.order == order
        for m in range(order):
            n = m // 2
            term = RationalFunc(q_(n * n, (-1) ** n), q_factorial(m))
            if m % 2:
                assert s[m] == term and c[m].is_zero()
            else:
                assert c[m] == term and s[m].is_zero()

    def test_tan_examples(self):
        t = tan_q(8)
        assert t[1] == RationalFunc.one()
        assert t[2].is_zero()
        assert t[3] == RationalFunc(q_(2), q_bracket(3))
        assert t[5].evaluate(1) == Fraction(2, 15)

    def test_tan_parity_and_classical_limit(self):
        t = tan_q(12)
        want = classical_tan(12)
        for m in range(12):
            if m % 2 == 0:
                assert t[m].is_zero()
            assert t[m].evaluate(1) == want[m]

    def test_bad_orders(self):
        for fn in (sin_q, cos_q, tan_q):
            with pytest.raises(ValueError):
                fn(0)


class TestSeriesArith:
    def test_self_difference(self):
        f = sin_q(7)
        d = series_arith("sub", f, f)
        assert d.is_zero() and d.order == 7

    def test_shift(self):
        g = series_arith("shift_by_z_power", cos_q(5), 1)
        assert g[1] == RationalFunc.one()
        assert g.order == 6

    def test_square_of_sin(self):
        sq = series_arith("mul", sin_q(6), sin_q(6))
        assert sq[2] == RationalFunc.one()
        assert sq.order == 6

    def test_min_order_rule(self):
        assert (sin_q(5) + cos_q(9)).order == 5
        assert (sin_q(5) * cos_q(9)).order == 5

    def test_scale(self):
        g = series_arith("scale_by_rf", cos_q(3), RationalFunc(q_bracket(2)))
        assert g[0] == RationalFunc(q_bracket(2))

    def test_divide_by_one(self):
        f = sin_q(6)
        assert series_div(f, ZSeries([1], 6)) == f

    def test_z_cos_over_cos(self):
        zc = cos_q(8).shift(1).truncate(8)
        got = series_div(zc, cos_q(8))
        assert got == ZSeries([0, 1], 8)

    def test_division_errors(self):
        with pytest.raises(ZeroDivisionError):
            series_div(sin_q(4), ZSeries([], 4))
        with pytest.raises(ValueError):
            series_div(cos_q(6), sin_q(6))

    def test_valuation_reduces_order(self):
        got = series_div(sin_q(8).shift(2), sin_q(8))
        assert got.order == 7

    @settings(max_examples=25, deadline=None)
    @given(
        st.lists(st.lists(st.integers(-3, 3), max_size=4), min_size=6, max_size=6),
        st.lists(st.lists(st.integers(-3, 3), max_size=4), min_size=6, max_size=6),
        st.integers(1, 4),
    )
    def test_division_postcondition(self, f_rows, g_rows, lead):
        def rf(cs, m):
            return RationalFunc(LaurentPoly({2 * i - m: c for i, c in enumerate(cs)}), q_bracket(m + 1))

        f = ZSeries([rf(cs, m) for m, cs in enumerate(f_rows)], 6)
        g = ZSeries([RationalFunc(q_bracket(lead))] + [rf(cs, m) for m, cs in enumerate(g_rows)][1:], 6)
        h = series_div(f, g)
        assert h.order == 6
        assert (g * h - f).is_zero()
