"""
Tests for Kloosterman, Ramanujan and incomplete sums
"""

import math

import numpy as np
import pytest

from btlab.constants import CONGRUENCE_RELATIVE_ERROR, KL_MOMENT_RATIO, VP_BOUND
from btlab.domain.errors import InvalidParameterError
from btlab.services import arith_sums
from btlab.services.characters import build_character_group, nontrivial_index, quadratic_character
from btlab.utils.modular import mu, phi


@pytest.fixture(scope='module')
def table_101():
    return arith_sums.kloosterman_table(101)


class TestKloosterman:
    """Tests for complete Kloosterman sums"""

    def test_weil_bound_prime(self):
        p = 31
        for m in range(1, p):
            for n in (1, 2, 5, 30):
                assert abs(arith_sums.kloosterman(m, n, p)) <= 2 * math.sqrt(p) + 1e-9

    def test_weil_bound_composite(self):
        for q in (30, 105, 210):
            for m, n in ((1, 1), (2, 3), (0, 7), (6, 10)):
                assert abs(arith_sums.kloosterman(m, n, q)) <= arith_sums.weil_bound(m, n, q) + 1e-9

    def test_real_and_symmetric(self):
        for q, m, n in ((97, 3, 11), (100, 7, 9), (63, 5, 0)):
            value = arith_sums.kloosterman(m, n, q)
            assert abs(value.imag) < 1e-9
            assert value == pytest.approx(arith_sums.kloosterman(n, m, q), abs=1e-9)

    def test_zero_frequencies_count_units(self):
        assert arith_sums.kloosterman(0, 0, 12).real == pytest.approx(4)

    @pytest.mark.parametrize('q1,q2', [(7, 9), (4, 15), (11, 13)])
    def test_crt_factorization(self, q1, q2):
        for m, n in ((1, 1), (3, 5), (10, 2)):
            direct = arith_sums.kloosterman(m, n, q1 * q2)
            assert arith_sums.kloosterman_crt(m, n, q1, q2) == pytest.approx(direct, abs=1e-8)

    def test_crt_needs_coprime_moduli(self):
        with pytest.raises(InvalidParameterError):
            arith_sums.kloosterman_crt(1, 1, 6, 9)


class TestRamanujan:
    """Tests for Ramanujan sums"""

    def test_mobius(self):
        for q in range(1, 60):
            assert arith_sums.ramanujan(1, q) == pytest.approx(mu(q), abs=1e-9)

    @pytest.mark.parametrize('m,q,expected', [(0, 12, 4), (2, 4, -2), (6, 6, 2), (5, 10, -4)])
    def test_values(self, m, q, expected):
        assert arith_sums.ramanujan(m, q) == pytest.approx(expected, abs=1e-9)

    def test_gcd_bound(self):
        for q in range(1, 40):
            for m in range(0, 40):
                assert abs(arith_sums.ramanujan(m, q)) <= math.gcd(m, q) + 1e-9


class TestKloostermanTable:
    """Tests for the transform-based table"""

    @pytest.mark.parametrize('p', [101, 499])
    def test_matches_direct_sums(self, p):
        table = arith_sums.kloosterman_table(p)
        for x in (0, 1, 2, 17, p - 1):
            assert table[x] == pytest.approx(arith_sums.kloosterman(x, 1, p).real / math.sqrt(p), abs=1e-9)

    def test_weil_and_second_moment(self, table_101):
        assert np.max(np.abs(table_101.values[1:])) <= 2
        assert float(np.sum(table_101.values**2)) == pytest.approx(100, abs=1e-8)

    @pytest.mark.parametrize('p', [2, 100, 1])
    def test_needs_odd_prime(self, p):
        with pytest.raises(InvalidParameterError):
            arith_sums.kloosterman_table(p)


class TestVpTransform:
    """Tests for vp_transform"""

    def test_plancherel(self, table_101):
        x = np.arange(101)
        v = arith_sums.vp_transform(101, 3, 7, table_101)
        energy = float(np.sum((table_101.at(3 * x) * table_101.at(7 * x)) ** 2))
        assert float(np.sum(np.abs(v) ** 2)) == pytest.approx(energy, abs=1e-8)

    def test_distinct_shifts_bounded(self, table_101):
        for a, b in ((1, 2), (5, 9), (50, 51)):
            assert np.max(np.abs(arith_sums.vp_transform(101, a, b, table_101))) <= VP_BOUND

    def test_diagonal_grows_like_sqrt_p(self, table_101):
        v = arith_sums.vp_transform(101, 4, 4, table_101)
        assert v[0].real == pytest.approx(100 / math.sqrt(101), abs=1e-8)
        assert abs(v[0].imag) < 1e-9

    def test_conjugate_symmetry(self, table_101):
        v = arith_sums.vp_transform(101, 2, 3, table_101)
        assert np.allclose(np.conj(v[1:]), v[1:][::-1], atol=1e-9)

    def test_rejects_zero_shift(self, table_101):
        with pytest.raises(InvalidParameterError):
            arith_sums.vp_transform(101, 0, 3, table_101)

    def test_rejects_mismatched_table(self, table_101):
        with pytest.raises(InvalidParameterError):
            arith_sums.vp_transform(103, 1, 2, table_101)


class TestMomentsAndLargeSieve:
    """Tests for kl_moment and large_sieve_check"""

    def test_first_moment_single_point(self, table_101):
        moment, ratio = arith_sums.kl_moment(101, 1, [1], table=table_101)
        assert moment == pytest.approx(100, abs=1e-8)
        assert ratio <= 2

    def test_second_moment_ratio(self):
        rng = np.random.default_rng(7)
        subset = rng.choice(np.arange(1, 500), size=20, replace=False)
        _, ratio = arith_sums.kl_moment(499, 2, subset, rng.choice([-1.0, 1.0], size=20))
        assert ratio <= KL_MOMENT_RATIO

    def test_moment_rejects_large_coefficients(self):
        with pytest.raises(InvalidParameterError):
            arith_sums.kl_moment(101, 1, [1, 2], [1.0, 1.5])

    def test_large_sieve(self):
        rng = np.random.default_rng(11)
        for q, N in ((1, 10), (12, 50), (97, 300)):
            alpha = rng.normal(size=N) + 1j * rng.normal(size=N)
            result = arith_sums.large_sieve_check(q, alpha, start=5)
            assert result['pass']
            assert result['routes_agree']
            assert result['lhs'] <= result['rhs']


class TestIncompleteSums:
    """Tests for incomplete character and Kloosterman sums"""

    def test_polya_vinogradov(self):
        group = build_character_group(1009)
        result = arith_sums.incomplete_char_sum(group, quadratic_character(group), 1, 100)
        assert result['abs_sum'] <= arith_sums.polya_vinogradov_bound(1009)
        assert set(result['burgess_ratios']) == {1, 2, 3}

    def test_full_period_vanishes(self):
        group = build_character_group(30)
        result = arith_sums.incomplete_char_sum(group, nontrivial_index(group), 7, 30)
        assert result['abs_sum'] < 1e-9

    def test_trivial_character_rejected(self):
        group = build_character_group(7)
        with pytest.raises(InvalidParameterError):
            arith_sums.incomplete_char_sum(group, (0,), 1, 5)

    def test_full_interval_is_ramanujan_sum(self):
        for h in (1, 2, 6, 35):
            result = arith_sums.incomplete_kloosterman(h, 210, 0, 210)
            assert result['sum'].real == pytest.approx(arith_sums.ramanujan(h, 210), abs=1e-8)

    def test_completion_bound(self):
        result = arith_sums.incomplete_kloosterman(1, 30030, 1, 3000)
        assert result['abs_sum'] <= result['completion_bound']

    @pytest.mark.parametrize('length', [1, 31])
    def test_interval_length(self, length):
        with pytest.raises(InvalidParameterError):
            arith_sums.incomplete_kloosterman(1, 30, 0, length)

    def test_rstar_scan_rows(self):
        rows = arith_sums.rstar_scan(210, 25, np.random.default_rng(3))
        assert len(rows) == 25
        assert list(rows[0]) == ['q', 'h', 'interval_start', 'interval_len', 'abs_sum', 'rstar_ratio', 'smooth_ratio']
        assert all(2 <= row['interval_len'] <= 210 for row in rows)


class TestCongruenceCount:
    """Tests for congruence_count"""

    def test_methods_agree(self):
        classes = arith_sums.congruence_count(7, 5, 30)
        brute = arith_sums.congruence_count(7, 5, 30, method='brute')
        assert classes.R_exact == pytest.approx(brute.R_exact, rel=1e-10)
        assert classes.main_term == brute.main_term

    def test_weighted_coefficients(self):
        alpha = np.linspace(-1, 1, 6)
        beta = np.cos(np.arange(6))
        classes = arith_sums.congruence_count(11, 6, 25, alpha, beta)
        brute = arith_sums.congruence_count(11, 6, 25, alpha, beta, method='brute')
        assert classes.R_exact == pytest.approx(brute.R_exact, rel=1e-9, abs=1e-12)

    def test_main_term(self):
        result = arith_sums.congruence_count(53, 20, 200)
        expected = phi(53) / 53**2 * 20 * 20 * (200 * arith_sums.bump_integral()) ** 2
        assert result.main_term == pytest.approx(expected)

    @pytest.mark.slow
    @pytest.mark.parametrize('N', [200, 400])
    def test_relative_error_small(self, N):
        assert arith_sums.congruence_count(53, 20, N).relative_error <= CONGRUENCE_RELATIVE_ERROR

    def test_needs_long_ranges(self):
        with pytest.raises(InvalidParameterError):
            arith_sums.congruence_count(101, 5, 20)

    def test_unknown_method(self):
        with pytest.raises(InvalidParameterError):
            arith_sums.congruence_count(7, 5, 30, method='fft')


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
