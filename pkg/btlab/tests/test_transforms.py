"""
Tests for the prime-length DFT
"""

import numpy as np
import pytest

from btlab.domain.errors import InvalidParameterError
from btlab.utils.transforms import prime_dft


class TestPrimeDft:
    """Tests for prime_dft"""

    @pytest.mark.parametrize('p', [3, 5, 7, 101, 1009])
    def test_forward_matches_numpy(self, p):
        rng = np.random.default_rng(p)
        values = rng.normal(size=p) + 1j * rng.normal(size=p)
        assert np.allclose(prime_dft(values), np.fft.fft(values), atol=1e-8)

    @pytest.mark.parametrize('p', [3, 13, 499])
    def test_inverse_sign(self, p):
        rng = np.random.default_rng(p)
        values = rng.normal(size=p)
        assert np.allclose(prime_dft(values, sign=1), p * np.fft.ifft(values), atol=1e-8)

    def test_round_trip(self):
        values = np.arange(31, dtype=float)
        assert np.allclose(prime_dft(prime_dft(values), sign=1) / 31, values, atol=1e-9)

    def test_length_two(self):
        assert np.allclose(prime_dft(np.array([3.0, 1.0])), [4.0, 2.0])

    @pytest.mark.parametrize('length', [4, 9, 100])
    def test_needs_prime_length(self, length):
        with pytest.raises(InvalidParameterError):
            prime_dft(np.ones(length))

    def test_bad_sign(self):
        with pytest.raises(InvalidParameterError):
            prime_dft(np.ones(7), sign=2)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
