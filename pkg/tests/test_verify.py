from fractions import Fraction

import pytest

from qtangent.exact import LaurentPoly, RationalFunc
from qtangent.qseries import q_bracket, q_factorial
from qtangent.verify import (
    LemmaRHSSpec,
    SuiteConfig,
    VerifyReport,
    all_passed,
    check_cf_coefficients,
    check_lemma,
    check_residual,
    check_residual_lemma,
    final_identity_check,
    final_identity_sides,
    inductive_step_check,
    lemma_lhs,
    lemma_rhs,
    master_identity,
    master_identity_check,
    master_terms,
    master_upper_limit,
    phi65_closed_form,
    phi65_finite_sum,
    phi65_summand,
    residual_series,
    run_suite,
    suite_tasks,
)


def q_(e, c=1):
    return LaurentPoly.q_power(e, c)


def float_poch(a, base, length, q):
    out = 1.0
    for i in range(length):
        out *= 1 - a * base**i
    return out


def float_summand(k, j, q):
    """Summand evaluated from its product definition with real q."""
    h = q ** (Fraction(17, 2) - k)
    g = q ** (Fraction(9, 2) - k)
    b = q**4
    num = float_poch(q ** (6 - 2 * k), b, j, q) * float_poch(q ** (4 - 2 * k), b, j, q)
    num *= float_poch(h, b, j, q) * float_poch(-h, b, j, q)
    den = float_poch(q**7, b, j, q) * float_poch(q**9, b, j, q) * float_poch(g, b, j, q) * float_poch(-g, b, j, q)
    return num / den * q ** ((2 * k - 1) * j)


class TestReport:
    def test_pass_iff_no_witness(self):
        VerifyReport("x", {}, True)
        VerifyReport("x", {}, False, "q")
        with pytest.raises(ValueError):
            VerifyReport("x", {}, True, "q")
        with pytest.raises(ValueError):
            VerifyReport("x", {}, False)


class TestResidual:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_vanishes_through_2n(self, n):
        res = residual_series(n)
        assert all(res[m].is_zero() for m in range(2 * n + 1))
        assert check_residual(n).passed

    def test_first_surviving_term_is_nonzero(self):
        assert not residual_series(3, 10)[8].is_zero()

    @pytest.mark.parametrize("n,k", [(1, 2), (2, 3), (3, 5), (4, 4)])
    def test_coefficients_are_lemma_sums(self, n, k):
        assert check_residual_lemma(n, k).passed

    def test_bad_n(self):
        with pytest.raises(ValueError):
            residual_series(0)


class TestLemma:
    def test_anchored_value(self):
        assert lemma_lhs(1, 2) == RationalFunc(q_(2, -1), q_bracket(3))
        assert lemma_rhs(1, 2) == lemma_lhs(1, 2)
        assert LemmaRHSSpec(1, 2).q_exponent == 2

    def test_small_zeros(self):
        for n in range(0, 5):
            assert lemma_lhs(n, 0).is_zero()
        assert lemma_lhs(1, 1).is_zero()

    def test_n_zero_closed_form(self):
        for k in range(1, 6):
            want = RationalFunc(q_((k - 1) ** 2), q_factorial(2 * k - 1))
            assert lemma_rhs(0, k) == want == lemma_lhs(0, k)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_vanishing_window(self, n):
        for k in range(0, n + 1):
            assert lemma_rhs(n, k).is_zero()
        for k in range(n + 1, n + 4):
            assert not lemma_rhs(n, k).is_zero()

    @pytest.mark.parametrize("n", range(0, 9))
    def test_exponent_is_integral(self, n):
        for k in range(0, 13):
            LemmaRHSSpec(n, k).q_exponent

    @pytest.mark.parametrize("n,k", [(1, 3), (2, 4), (3, 3), (5, 7), (6, 9)])
    def test_check_lemma(self, n, k):
        assert check_lemma(n, k).passed

    def test_domain(self):
        with pytest.raises(ValueError):
            lemma_rhs(-1, 2)
        with pytest.raises(ValueError):
            lemma_lhs(1, -1)


class TestInductiveAndMaster:
    @pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (4, 3), (5, 8)])
    def test_inductive(self, n, k):
        assert inductive_step_check(n, k).passed

    def test_inductive_domain(self):
        with pytest.raises(ValueError):
            inductive_step_check(0, 2)

    def test_upper_limit(self):
        assert [master_upper_limit(n) for n in range(1, 8)] == [-1, -1, 0, 0, 1, 1, 2]

    @pytest.mark.parametrize("n,k", [(1, 2), (2, 1), (3, 2), (4, 3), (7, 5)])
    def test_master_vanishes(self, n, k):
        assert master_identity(n, k).is_zero()
        assert master_identity_check(n, k).passed

    def test_master_terms_are_individually_nonzero(self):
        terms = master_terms(4, 3)
        assert len(terms) == 5
        assert sum(not t.is_zero() for t in terms) >= 3


class TestPhi65:
    def test_x_zero(self):
        for k in range(0, 6):
            assert phi65_finite_sum(0, k) == RationalFunc.one()

    def test_vanishing_summand(self):
        # (q^(4-2k); q^4)_1 = 0 at k=2 and (q^(6-2k); q^4)_1 = 0 at k=3
        assert phi65_summand(2, 1).is_zero()
        assert phi65_summand(3, 1).is_zero()
        assert phi65_finite_sum(1, 3) == RationalFunc.one()

    @pytest.mark.parametrize("k,j", [(0, 1), (5, 1), (1, 2), (7, 3)])
    def test_summand_against_float_products(self, k, j):
        q = 0.8
        exact = phi65_summand(k, j).evaluate(q**0.5)
        assert exact == pytest.approx(float_summand(k, j, q), rel=1e-9)

    @pytest.mark.parametrize("x,k", [(0, 3), (1, 2), (2, 5), (4, 6)])
    def test_closed_form(self, x, k):
        assert phi65_finite_sum(x, k) == phi65_closed_form(x, k)

    def test_closed_form_trivial(self):
        assert phi65_closed_form(0, 3) == RationalFunc.one()


class TestFinalIdentity:
    @pytest.mark.parametrize("k", range(0, 6))
    def test_n_one(self, k):
        assert final_identity_check(1, k).passed

    @pytest.mark.parametrize("N,k", [(2, 0), (3, 4), (5, 9)])
    def test_examples(self, N, k):
        lhs, rhs = final_identity_sides(N, k)
        assert lhs == rhs

    def test_domain(self):
        with pytest.raises(ValueError):
            final_identity_check(0, 1)


class TestSuite:
    SMALL = SuiteConfig(max_n=2, max_k=3, max_N=2, max_x=2, max_depth=3, series_order=8)

    def test_small_config_passes(self):
        reports = run_suite(self.SMALL)
        assert reports and all_passed(reports)
        kinds = {r.identity_id for r in reports}
        assert {"residual", "lemma", "master_identity", "phi65", "final_identity", "cf_coefficient"} <= kinds

    def test_empty_range_gives_empty_suite(self):
        assert run_suite(SuiteConfig(max_n=0)) == []
        assert suite_tasks(SuiteConfig(max_k=0)) == []

    def test_bad_config(self):
        with pytest.raises(ValueError):
            SuiteConfig(max_n=-1)
        with pytest.raises(ValueError):
            SuiteConfig(max_depth=10, series_order=20)

    @pytest.mark.parametrize("bad", [1, 3])
    def test_negative_control(self, bad):
        cfg = SuiteConfig(max_n=1, max_k=1, max_N=1, max_x=0, max_depth=3, series_order=8, corrupt_b=bad)
        reports = run_suite(cfg)
        failed = [r for r in reports if not r.passed]
        assert [(r.identity_id, r.parameters) for r in failed] == [("cf_coefficient", {"n": bad})]
        assert failed[0].witness

    def test_direct_negative_control_witness(self):
        reps = check_cf_coefficients(4, 10, corrupt=2)
        assert [r.passed for r in reps] == [True, False, True, True]
        # b_2 tops out at q^0, so the corruption adds q^1 and the witness is its negative
        assert reps[1].witness == "-q"

    def test_parallel_matches_serial(self):
        serial = run_suite(self.SMALL)
        parallel = run_suite(self.SMALL, jobs=2)
        key = lambda r: (r.identity_id, r.parameters, r.passed, r.witness)
        assert [key(r) for r in serial] == [key(r) for r in parallel]
