"""
Modular arithmetic helpers shared by the sum and prime-count services.
"""

import math

import numpy as np
from sympy import divisor_count, factorint, isprime, mobius, primerange, totient

from btlab.domain.errors import InvalidParameterError

MAX_MODULUS = 2**61


def check_modulus(q: int, minimum: int = 1) -> int:
    if q < minimum:
        raise InvalidParameterError(f'modulus must be >= {minimum}, got {q}')
    if q >= MAX_MODULUS:
        raise InvalidParameterError(f'modulus {q} exceeds 2**61')
    return int(q)


def phi(q: int) -> int:
    return int(totient(q))


def mu(q: int) -> int:
    return int(mobius(q))


def tau(q: int) -> int:
    return int(divisor_count(q))


def mod_inverse(a: int, q: int) -> int:
    """Inverse of a modulo q; 0 for q == 1"""
    if q == 1:
        return 0
    try:
        return pow(a, -1, q)
    except ValueError:
        raise InvalidParameterError(f'{a} is not invertible modulo {q}')


def unit_inverses(q: int) -> np.ndarray:
    """inv[a] = a^-1 mod q for units a, -1 elsewhere"""
    inverses = np.full(q, -1, dtype=np.int64)
    for a in range(q):
        if math.gcd(a, q) == 1:
            inverses[a] = mod_inverse(a, q)
    return inverses


def coprime_mask(q: int, values: np.ndarray) -> np.ndarray:
    return np.gcd(np.asarray(values, dtype=np.int64), q) == 1


def is_squarefree(q: int) -> bool:
    return all(e == 1 for e in factorint(q).values())


def is_smooth_squarefree(q: int, eta: float) -> bool:
    """Squarefree q whose prime factors are all <= q**eta"""
    if q < 2:
        return False
    factors = factorint(q)
    return all(e == 1 for e in factors.values()) and max(factors) <= q**eta


def random_smooth_modulus(rng: np.random.Generator, max_prime: int, eta: float) -> int:
    """
    Product of distinct random primes <= max_prime that satisfies the eta-smoothness condition.

    Primes are added in random order until the product is large enough for its largest factor.
    """
    primes = list(primerange(2, max_prime + 1))
    if not primes:
        raise InvalidParameterError(f'no primes up to {max_prime}')
    q = 1
    largest = 0
    for p in rng.permutation(primes):
        q *= int(p)
        largest = max(largest, int(p))
        if largest <= q**eta:
            return q
    raise InvalidParameterError(f'primes up to {max_prime} cannot build an eta={eta} smooth modulus')


def random_prime(rng: np.random.Generator, lo: int, hi: int) -> int:
    candidates = [p for p in primerange(lo, hi + 1)]
    if not candidates:
        raise InvalidParameterError(f'no primes in [{lo}, {hi}]')
    return int(candidates[rng.integers(len(candidates))])


def random_squarefree_composite(rng: np.random.Generator, hi: int) -> int:
    while True:
        q = int(rng.integers(6, hi + 1))
        if not isprime(q) and is_squarefree(q):
            return q
