import pytest

from conftest import tol2
from graypi import (
    BigReal,
    classic_term,
    convergence_table,
    error_sequence,
    evaluate,
    exact_pi,
    golden_ratio,
    gray_term,
    phi_asymptotic,
    phi_exact,
    reference_pi,
)
from graypi.pi_formulas import classic_word

PHI_40 = "1.6180339887498948482045868343656381177203"


class TestClassicTerm:
    def test_first_term(self):
        record = classic_term(1, 128)
        assert str(record.word) == "1"
        assert record.approximant.to_decimal_truncated(8) == "3.06146745"

    def test_error_matches_taylor_remainder(self):
        # |approximant - pi| ~ pi^3 / (6 * 4^(n+2)), within a factor of 2
        bits = 192
        pi = reference_pi(bits)
        for n in (4, 10, 16):
            err = classic_term(n, bits).abs_error
            model = pi * pi * pi / (6 * (1 << (2 * (n + 2))))
            assert model.scale_2exp(-1) < err < model.scale_2exp(1)

    def test_approximants_increase_monotonically(self):
        bits = 256
        prev = None
        for n in range(1, 41):
            approx = classic_term(n, bits).approximant
            if prev is not None:
                assert approx > prev
            assert approx < reference_pi(bits)
            prev = approx

    def test_rejects_zero_depth(self):
        with pytest.raises(ValueError):
            classic_term(0, 128)


class TestGrayTerm:
    def test_worked_example_depth_8(self):
        record = gray_term(3, 5, 8, 192)
        assert str(record.word) == "10000111"
        assert record.approximant.to_decimal_truncated(6) == "3.140996"

    def test_worked_example_depth_12(self):
        record = gray_term(3, 5, 12, 192)
        assert str(record.word) == "100000000111"
        assert record.approximant.to_decimal_truncated(9) == "3.141590324"

    def test_h_zero_reduces_to_classic(self):
        # m=1, h=0 builds the same word as the classic family
        for n in (3, 7, 12):
            g = gray_term(1, 0, n, 128)
            c = classic_term(n, 128)
            assert g.word == c.word
            assert g.approximant == c.approximant

    def test_error_scaling_in_h(self):
        # |gray_term - pi| ~ pi^3 (2h+1)^2 / (6 * 4^(n+2)) for n >= m+6
        bits = 192
        pi = reference_pi(bits)
        for m, h, n in ((2, 3, 12), (3, 5, 14), (4, 11, 16)):
            err = gray_term(m, h, n, bits).abs_error
            model = pi * pi * pi * (2 * h + 1) ** 2 / (6 * (1 << (2 * (n + 2))))
            assert model.scale_2exp(-1) < err < model.scale_2exp(1)

    @pytest.mark.parametrize("m,h,n", [(3, 8, 10), (3, -1, 10), (3, 5, 4), (0, 0, 5)])
    def test_domain_errors(self, m, h, n):
        with pytest.raises(ValueError):
            gray_term(m, h, n, 128)


class TestErrorSequence:
    def test_positive_and_strictly_decreasing_to_60(self):
        bits = 400
        prev = None
        for n in range(1, 62):
            e = error_sequence(n, bits)
            assert e > 0
            if prev is not None:
                assert e < prev
            prev = e

    def test_scaled_error_vanishes(self):
        # 2^(n+1) e(n) = pi - classic approximant -> 0
        bits = 256
        scaled = [error_sequence(n, bits).scale_2exp(n + 1) for n in (5, 10, 20, 40)]
        assert all(a > b for a, b in zip(scaled, scaled[1:]))
        assert scaled[-1] < BigReal("1e-20", bits)

    def test_pi_over_power_of_two_dominates_radical(self):
        # pi / 2^n >= the depth n-1 classic radical
        bits = 333
        pi = reference_pi(bits)
        for n in range(1, 61):
            radical = evaluate(classic_word(n - 1), bits)
            assert pi.scale_2exp(-n) - radical >= 0


class TestExactPi:
    def test_depth_two_collapses_to_arctan_one(self):
        # omega("1") = 2 - sqrt(2): half - 1 = -sqrt(2)/2, inner sqrt is 1,
        # so the identity is 4 arctan(1) = pi
        assert abs(exact_pi(2, 0, 256) - reference_pi(256)) < tol2(256, 24)

    def test_deep_identity_to_60_digits(self):
        bits = 256
        err = abs(exact_pi(10, 100, bits) - reference_pi(bits))
        assert err < BigReal("1e-60", bits)

    def test_h_max_enforced(self):
        with pytest.raises(ValueError):
            exact_pi(4, 4, 128)
        with pytest.raises(ValueError):
            exact_pi(1, 0, 128)
        exact_pi(4, 3, 128)  # h_max itself is fine

    def test_identity_character_exhaustive_to_depth_10(self):
        bits = 128
        budget = tol2(bits, 24)
        pi = reference_pi(bits)
        for n in range(2, 11):
            for h in range(0, 1 << (n - 2)):
                assert abs(exact_pi(n, h, bits) - pi) < budget


class TestGoldenRatio:
    def test_reference_value(self):
        assert golden_ratio(192).to_decimal_truncated(40) == PHI_40

    def test_exact_identity_at_minimum_depth(self):
        err = abs(phi_exact(4, 128) - golden_ratio(128))
        assert err < BigReal("1e-30", 128)

    def test_exact_identity_deep(self):
        err = abs(phi_exact(12, 256) - golden_ratio(256))
        assert err < BigReal("1e-60", 256)

    def test_exact_identity_depth_independent(self):
        bits = 192
        budget = tol2(bits, 24)
        first = phi_exact(4, bits)
        for n in range(5, 17):
            assert abs(phi_exact(n, bits) - first) < budget

    def test_depth_domain(self):
        with pytest.raises(ValueError):
            phi_exact(3, 128)
        with pytest.raises(ValueError):
            phi_asymptotic(3, 128)

    def test_asymptotic_error_strictly_decreasing(self):
        bits = 256
        phi = golden_ratio(bits)
        prev = None
        for n in range(6, 41):
            err = abs(phi_asymptotic(n, bits) - phi)
            if prev is not None:
                assert err < prev
            prev = err

    def test_rearranged_consistency(self):
        # (2^(n+1) / pi) * evaluate(1 0^(n-3) 11) -> 5
        from graypi import compose_word, word_at

        bits = 192
        n = 20
        word = compose_word(True, n - 3, word_at(2, 3))
        value = evaluate(word, bits).scale_2exp(n + 1) / reference_pi(bits)
        assert abs(value - 5) < BigReal("1e-8", bits)

    def test_printed_exponent_variant_misses_phi(self):
        # the uncorrected exponent converges to 1/2 + sqrt(5/8) ~ 1.2906
        bits = 192
        variant = phi_asymptotic(30, bits, printed_exponent=True)
        target = BigReal(5, bits) / 8
        assert abs(variant - (target.sqrt() + BigReal("0.5", bits))) < BigReal("1e-10", bits)


class TestConvergenceTable:
    def test_classic_sweep(self):
        rows = convergence_table("classic", range(1, 21), 192)
        assert len(rows) == 20
        errors = [r.abs_error for r in rows]
        assert all(a > b for a, b in zip(errors, errors[1:]))
        digits = [r.digits_correct() for r in rows]
        assert digits == sorted(digits)

    def test_gray_sweep_matches_worked_example(self):
        rows = convergence_table("gray", range(8, 13), 192, m=3, h=5)
        assert rows[0].approximant.to_decimal_truncated(6) == "3.140996"
        assert rows[-1].approximant.to_decimal_truncated(9) == "3.141590324"
        errors = [r.abs_error for r in rows]
        assert all(a > b for a, b in zip(errors, errors[1:]))

    def test_empty_range(self):
        assert convergence_table("classic", range(5, 5), 128) == []

    def test_gray_requires_parameters(self):
        with pytest.raises(ValueError):
            convergence_table("gray", range(8, 10), 128)
        with pytest.raises(ValueError):
            convergence_table("unknown", range(1, 2), 128)
