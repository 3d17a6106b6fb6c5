"""
Prime-length discrete Fourier transform by Rader's reindexing.

For prime p and a primitive root g, the nonzero frequencies of a length-p DFT are a cyclic convolution of length
p - 1 over the exponents of g, which numpy.fft evaluates in O(p log p).
"""

import logging
from functools import lru_cache

import numpy as np
from sympy import isprime, primitive_root

from btlab.domain.errors import InvalidParameterError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def _rader_plan(p: int, sign: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    g = primitive_root(p)
    powers = np.empty(p - 1, dtype=np.int64)
    value = 1
    for j in range(p - 1):
        powers[j] = value
        value = value * g % p
    # inverse powers g^(-j) = g^(p-1-j)
    inverse_powers = np.concatenate(([1], powers[:0:-1]))
    kernel = np.exp(sign * 2j * np.pi * powers / p)
    logger.debug(f'Rader plan for p={p}: primitive root {g}')
    return powers, inverse_powers, np.fft.fft(kernel)


def prime_dft(values: np.ndarray, sign: int = -1) -> np.ndarray:
    """
    X[k] = sum_n values[n] * exp(sign * 2*pi*i * n*k / p) for a prime length p.

    Args:
        values: complex or real samples, length must be prime
        sign: -1 for the forward transform (numpy.fft.fft convention), +1 for the unnormalized inverse

    Returns:
        Complex spectrum of the same length
    """
    x = np.asarray(values, dtype=np.complex128)
    p = len(x)
    if sign not in (-1, 1):
        raise InvalidParameterError(f'sign must be -1 or +1, got {sign}')
    if p == 2:
        return np.array([x[0] + x[1], x[0] - x[1]])
    if not isprime(p):
        raise InvalidParameterError(f'prime_dft needs a prime length, got {p}')

    powers, inverse_powers, kernel_spectrum = _rader_plan(p, sign)
    permuted = x[inverse_powers]
    convolution = np.fft.ifft(np.fft.fft(permuted) * kernel_spectrum)

    out = np.empty(p, dtype=np.complex128)
    out[0] = x.sum()
    out[powers] = x[0] + convolution
    return out
