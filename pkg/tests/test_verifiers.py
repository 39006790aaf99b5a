"""Per-family verifier behavior: passing instances, hypothesis guards,
report structure, and the cross-family consistency checks."""

from fractions import Fraction

import pytest

from supercongruences.errors import HypothesisViolated
from supercongruences.hypergeom import AffineWeight, affine_weighted_sum, evaluate_exact
from supercongruences.padic import PrimePower, reduce_mod, valuation
from supercongruences.verifiers import (
    Case,
    Report,
    central_series,
    run_case,
    verify_combined,
    verify_dflst,
    verify_four_k_plus_one,
    verify_guo_central,
    verify_guo_even,
    verify_guo_linear,
    verify_guo_odd,
    verify_harmonic_even,
    verify_harmonic_odd,
    verify_km_deformed,
    verify_liu,
    verify_rodriguez_villegas,
    verify_sun,
    verify_three_series,
)

F = Fraction


class TestRodriguezVillegas:
    def test_p5(self):
        report = verify_rodriguez_villegas(5)
        assert report.verdict
        assert report.lhs.value == 1 and report.rhs.value == 1

    def test_p13_positive_sign(self):
        report = verify_rodriguez_villegas(13)
        assert report.verdict and report.rhs == 1

    def test_p7_negative_sign(self):
        report = verify_rodriguez_villegas(7)
        assert report.verdict
        assert report.rhs.value == 48  # -1 mod 49

    def test_guards(self):
        with pytest.raises(HypothesisViolated):
            verify_rodriguez_villegas(3)
        with pytest.raises(HypothesisViolated):
            verify_rodriguez_villegas(9)


class TestSun:
    def test_half_specializes_to_rv(self):
        a, b = verify_sun(F(1, 2), 5), verify_rodriguez_villegas(5)
        assert a.verdict
        assert a.lhs == b.lhs and a.rhs == b.rhs

    def test_third_at_p7(self):
        report = verify_sun(F(1, 3), 7)
        assert report.verdict
        assert report.lhs.value == 1  # exact sum 68584051/43046721 reduces to 1

    def test_quarter_at_p5(self):
        report = verify_sun(F(1, 4), 5)
        assert report.verdict
        assert report.rhs.value == 24  # <-1/4>_5 = 1 gives sign -1

    def test_rejects_non_unit(self):
        with pytest.raises(HypothesisViolated):
            verify_sun(F(1, 5), 5)  # not p-integral
        with pytest.raises(HypothesisViolated):
            verify_sun(F(5, 7), 5)  # numerator divisible by p


class TestDflst:
    def test_d2_matches_rv(self):
        # same series, and the right sides agree through the reflection sign
        for p in (5, 7, 11, 13, 17):
            a, b = verify_dflst(2, p, 2), verify_rodriguez_villegas(p)
            assert a.verdict
            assert a.lhs == b.lhs and a.rhs == b.rhs

    def test_d2_p5_rhs_value(self):
        assert verify_dflst(2, 5, 2).rhs == 1  # -Gamma(1/2)^2 = 1 mod 25

    def test_strength_three(self):
        assert verify_dflst(3, 7, 3).verdict
        assert verify_dflst(4, 13, 3).verdict

    def test_precision_descent(self):
        strong = verify_dflst(3, 7, 3)
        weak = verify_dflst(3, 7, 2)
        assert strong.lhs.at_precision(2) == weak.lhs
        assert strong.rhs.at_precision(2) == weak.rhs

    def test_guards(self):
        with pytest.raises(HypothesisViolated):
            verify_dflst(1, 5, 2)
        with pytest.raises(HypothesisViolated):
            verify_dflst(2, 5, 3)  # strength 3 needs d >= 3
        with pytest.raises(HypothesisViolated):
            verify_dflst(3, 5, 2)  # 5 is not 1 mod 3
        with pytest.raises(HypothesisViolated):
            verify_dflst(3, 7, 4)


class TestGuoLinear:
    @pytest.mark.parametrize("d,p", [(2, 5), (3, 7), (4, 5)])
    def test_passes(self, d, p):
        assert verify_guo_linear(d, p).verdict

    def test_weighted_sum_fixture(self):
        # d = 2, p = 5: sum k (1/2)_k^2/k!^2 = 4601/4096, residue 6 mod 25
        report = verify_guo_linear(2, 5)
        assert report.lhs.value == 6 and report.rhs.value == 6


class TestGuoEvenOdd:
    @pytest.mark.parametrize("d,p", [(4, 7), (4, 11), (6, 11)])
    def test_even_passes(self, d, p):
        assert verify_guo_even(d, p).verdict

    def test_even_smallest_instance_value(self):
        # frozen from the naive oracle: both sides are 27 mod 49
        report = verify_guo_even(4, 7)
        assert report.lhs.value == 27 and report.rhs.value == 27

    @pytest.mark.parametrize("d,p", [(3, 5), (3, 11), (5, 19)])
    def test_odd_passes(self, d, p):
        assert verify_guo_odd(d, p).verdict

    def test_even_guards(self):
        with pytest.raises(HypothesisViolated):
            verify_guo_even(5, 9)  # d odd and 9 composite
        with pytest.raises(HypothesisViolated):
            verify_guo_even(4, 3)  # p = d-1 < 2d-1
        with pytest.raises(HypothesisViolated):
            verify_guo_even(4, 13)  # 13 is 1 mod 4

    def test_odd_guards(self):
        with pytest.raises(HypothesisViolated):
            verify_guo_odd(4, 7)
        with pytest.raises(HypothesisViolated):
            verify_guo_odd(3, 7)  # 7 is 1 mod 3


class TestGuoCentral:
    def test_fixture_p5(self):
        report = verify_guo_central(5, 1)
        assert report.verdict
        weighted = affine_weighted_sum(AffineWeight(1, -6), central_series(4))
        assert weighted == F(-135250, 16384)
        assert valuation(weighted, 5) >= 3

    @pytest.mark.parametrize("p,r", [(13, 1), (5, 2)])
    def test_passes(self, p, r):
        assert verify_guo_central(p, r).verdict

    def test_decomposition_equivalence(self):
        # sum (4k+1) t_k ≡ p^{2r} sum t_k mod p^{2r+1} exactly when the
        # centered-weight sum vanishes, since their difference is 4x it
        for p, r in ((5, 1), (13, 1), (5, 2)):
            ctx = PrimePower(p, 2 * r + 1)
            spec = central_series(p**r - 1)
            four_k = reduce_mod(affine_weighted_sum(AffineWeight(4, 1), spec), ctx)
            scaled = reduce_mod(p ** (2 * r) * evaluate_exact(spec), ctx)
            assert (four_k == scaled) == verify_guo_central(p, r).verdict
            assert four_k == scaled

    def test_guards(self):
        with pytest.raises(HypothesisViolated):
            verify_guo_central(7, 1)  # 7 is 3 mod 4
        with pytest.raises(HypothesisViolated):
            verify_guo_central(5, 0)


class TestHarmonicLemmas:
    def test_even_instance(self):
        report = verify_harmonic_even(4, 7)
        assert report.verdict
        assert report.lhs.value == 2 and report.rhs.value == 2  # naive-oracle values

    def test_odd_instance(self):
        report = verify_harmonic_odd(3, 5)
        assert report.verdict
        assert report.lhs.value == 1 and report.rhs.value == 1

    def test_hypotheses_match_main_families(self):
        with pytest.raises(HypothesisViolated):
            verify_harmonic_even(3, 5)
        with pytest.raises(HypothesisViolated):
            verify_harmonic_odd(4, 7)
        with pytest.raises(HypothesisViolated):
            verify_harmonic_even(4, 3)  # below 2d-1


class TestFourKPlusOne:
    def test_n1(self):
        report = verify_four_k_plus_one(1)
        assert report.verdict and report.lhs == 1 and report.rhs == 1

    def test_n2(self):
        report = verify_four_k_plus_one(2)
        assert report.verdict
        assert report.lhs == F(9, 4) and report.rhs == F(4, 64) * 36

    def test_n25(self):
        assert verify_four_k_plus_one(25).verdict

    def test_guard(self):
        with pytest.raises(HypothesisViolated):
            verify_four_k_plus_one(0)


class TestLiu:
    def test_fixture_p5(self):
        report = verify_liu(5, 1)
        assert report.verdict and report.lhs == 1

    @pytest.mark.parametrize("p,r", [(13, 1), (5, 2)])
    def test_passes(self, p, r):
        assert verify_liu(p, r).verdict

    def test_guard(self):
        with pytest.raises(HypothesisViolated):
            verify_liu(7, 1)


class TestThreeSeries:
    def test_truncation_zero(self):
        report = verify_three_series(3, 0)
        assert report.verdict
        assert report.lhs == 3 and report.rhs == 3  # 1 + (d-1) vs d

    @pytest.mark.parametrize("d,n", [(4, 10), (5, 6), (2, 8)])
    def test_passes(self, d, n):
        assert verify_three_series(d, n).verdict

    def test_guards(self):
        with pytest.raises(HypothesisViolated):
            verify_three_series(1, 5)
        with pytest.raises(HypothesisViolated):
            verify_three_series(3, -1)


class TestCombined:
    @pytest.mark.parametrize("d,p", [(3, 5), (4, 7)])
    def test_passes(self, d, p):
        report = verify_combined(d, p)
        assert report.verdict and report.lhs == 0

    def test_excludes_p_equal_d_minus_one(self):
        with pytest.raises(HypothesisViolated):
            verify_combined(4, 3)

    def test_guards(self):
        with pytest.raises(HypothesisViolated):
            verify_combined(2, 5)
        with pytest.raises(HypothesisViolated):
            verify_combined(3, 7)


class TestKmDeformed:
    def test_origin(self):
        assert verify_km_deformed(4, 7, 0, 0).verdict

    def test_fixture(self):
        report = verify_km_deformed(4, 7, F(1, 5), F(-1, 3))
        assert report.verdict
        assert report.lhs == 162 and report.rhs == 162

    def test_larger(self):
        assert verify_km_deformed(6, 11, F(1, 2), F(1, 2)).verdict

    def test_guards(self):
        with pytest.raises(HypothesisViolated):
            verify_km_deformed(3, 5, 0, 0)  # odd d not admitted here


class TestArithmeticSpotChecks:
    """The two single-modulus reductions the central-binomial argument
    leans on: a Fermat power and a Lucas binomial chain."""

    @pytest.mark.parametrize("p,r", [(5, 1), (13, 1), (17, 1), (5, 2), (13, 2)])
    def test_power_of_four_reduces_to_four(self, p, r):
        assert pow(4, 2 * p**r - 1, p) == 4 % p

    @pytest.mark.parametrize("p,r", [(5, 1), (13, 1), (17, 1), (5, 2)])
    def test_central_binomial_reduces_to_two(self, p, r):
        from supercongruences.exact import binomial

        assert binomial(2 * p**r, p**r) % p == 2


class TestReportsAndDispatch:
    def test_deterministic_reports(self):
        case = Case("dflst", d=3, p=7, strength=2)
        assert run_case(case) == run_case(case)  # elapsed excluded from equality

    def test_json_round_trip_residues(self):
        report = verify_dflst(3, 7, 3)
        back = Report.from_dict(report.to_dict())
        assert back == report
        assert back.elapsed == pytest.approx(report.elapsed)
        assert back.case == report.case
        assert back.lhs == report.lhs and back.rhs == report.rhs
        assert back.modulus == report.modulus and back.note == report.note

    def test_json_round_trip_rationals(self):
        report = verify_km_deformed(4, 7, F(1, 5), F(-1, 3))
        back = Report.from_dict(report.to_dict())
        assert back == report and back.case.x == F(1, 5)

    def test_case_label(self):
        assert Case("rv", p=5).label() == "rv"
        assert Case("sun", p=5, alpha=F(1, 3)).label() == "sun(alpha=1/3)"

    def test_unknown_kind(self):
        with pytest.raises(HypothesisViolated):
            run_case(Case("nonsense", p=5))

    def test_missing_params(self):
        with pytest.raises(HypothesisViolated):
            run_case(Case("dflst", d=3))

    def test_dispatch_matches_direct_call(self):
        direct = verify_guo_even(4, 7)
        dispatched = run_case(Case("guo-even", d=4, p=7))
        assert direct == dispatched
