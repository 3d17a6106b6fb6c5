"""
Segmented sieve of Eratosthenes over odd numbers and prime counts in residue classes.
"""

import logging
import math
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np
from attr import dataclass
from sympy import isprime

from btlab.domain.entities.curve import CurveParams
from btlab.domain.entities.residue_counts import ResidueCounts
from btlab.domain.errors import InvalidParameterError
from btlab.services.arith_sums import SMOOTH_DEFAULT_PAIR
from btlab.services.bt_constants import eval_curve
from btlab.services.curve_catalog import THETA_KIM_SARNAK
from btlab.utils.modular import phi

logger = logging.getLogger(__name__)

DEFAULT_SEGMENT_ODDS = 1 << 20


def simple_sieve(limit: int) -> np.ndarray:
    """Plain sieve of Eratosthenes; is_prime[n] for 0 <= n <= limit"""
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for n in range(2, math.isqrt(limit) + 1):
        if is_prime[n]:
            is_prime[n * n::n] = False
    return is_prime


@dataclass(slots=True, frozen=True, eq=False)
class PrimeSieve:
    """
    Compact prime indicator up to `limit`.

    Odd n = 2i + 1 are stored by index i in segments of `segment_odds`; segments are produced on demand, so memory
    stays at the base primes plus a few segments.
    """
    limit: int
    segment_odds: int
    threads: int
    base_primes: np.ndarray

    @property
    def odd_count(self) -> int:
        return (self.limit - 1) // 2 + 1

    def _sieve_segment(self, first: int) -> tuple[int, np.ndarray]:
        last = min(first + self.segment_odds, self.odd_count)
        mask = np.ones(last - first, dtype=bool)
        if first == 0:
            mask[0] = False
        high = 2 * last - 1
        for p in self.base_primes:
            p = int(p)
            if p * p > high:
                break
            # odd multiples of p sit at indices (p - 1) / 2 mod p
            start = max(first, (p * p - 1) // 2)
            offset = (p - 1) // 2
            start += (offset - start) % p
            mask[start - first::p] = False
        return first, mask

    def segments(self) -> Iterator[tuple[int, np.ndarray]]:
        """(first odd index, mask) pairs in increasing order"""
        starts = list(range(0, self.odd_count, self.segment_odds))
        batch = max(1, self.threads)
        with ThreadPoolExecutor(max_workers=batch) as pool:
            for i in range(0, len(starts), batch):
                yield from pool.map(self._sieve_segment, starts[i:i + batch])
                logger.debug(f'Sieved {min(i + batch, len(starts))}/{len(starts)} segments up to {self.limit}')

    def odd_primes(self) -> Iterator[np.ndarray]:
        for first, mask in self.segments():
            yield 2 * (first + np.flatnonzero(mask)) + 1

    def count(self) -> int:
        return 1 + sum(int(np.count_nonzero(mask)) for _, mask in self.segments())

    def primes(self) -> np.ndarray:
        return np.concatenate([np.array([2], dtype=np.int64), *self.odd_primes()])


def sieve_primes(limit: int, segment_odds: int = DEFAULT_SEGMENT_ODDS, threads: int = 1) -> PrimeSieve:
    if limit < 2:
        raise InvalidParameterError(f'limit must be >= 2, got {limit}')
    root = math.isqrt(limit)
    base = np.flatnonzero(simple_sieve(root)) if root >= 2 else np.array([], dtype=np.int64)
    return PrimeSieve(limit=limit, segment_odds=segment_odds, threads=threads, base_primes=base[base > 2])


def prime_pi(limit: int, segment_odds: int = DEFAULT_SEGMENT_ODDS, threads: int = 1) -> int:
    return sieve_primes(limit, segment_odds, threads).count()


def _check_range(x: int, q: int, minimum: int) -> None:
    if q < minimum:
        raise InvalidParameterError(f'q must be >= {minimum}, got {q}')
    if q >= x:
        raise InvalidParameterError(f'need q < x, got q = {q}, x = {x}')


def residue_counts_from_primes(primes: np.ndarray, x: int, q: int) -> ResidueCounts:
    """Counts over coprime residues; primes dividing q land in non-coprime classes and drop out"""
    totals = np.bincount(primes[primes <= x] % q, minlength=q)
    counts = {a: int(totals[a]) for a in range(q) if math.gcd(a, q) == 1}
    return ResidueCounts(x=x, q=q, counts=counts, phi_q=phi(q))


def _residue_counts(x: int, q: int, segment_odds: int, threads: int) -> ResidueCounts:
    sieve = sieve_primes(x, segment_odds, threads)
    totals = np.zeros(q, dtype=np.int64)
    totals[2 % q] += 1
    for chunk in sieve.odd_primes():
        totals += np.bincount(chunk % q, minlength=q)
    counts = {a: int(totals[a]) for a in range(q) if math.gcd(a, q) == 1}
    return ResidueCounts(x=x, q=q, counts=counts, phi_q=phi(q))


def pi_in_ap(x: int, q: int, segment_odds: int = DEFAULT_SEGMENT_ODDS, threads: int = 1) -> ResidueCounts:
    """pi(x; q, a) for every a coprime to q in one sieve pass"""
    _check_range(x, q, 2)
    return _residue_counts(x, q, segment_odds, threads)


def mv_bound(x: int, q: int) -> float:
    """2 x / (phi(q) log(x / q))"""
    return 2 * x / (phi(q) * math.log(x / q))


def mv_check(x: int, q: int, counts: ResidueCounts | None = None) -> dict:
    _check_range(x, q, 1)
    counts = counts or _residue_counts(x, q, DEFAULT_SEGMENT_ODDS, 1)
    bound = mv_bound(x, q)
    return {
        'x': x,
        'q': q,
        'max_a': counts.max_residue,
        'max_count': counts.max_count,
        'mv_bound': bound,
        'pass': counts.max_count <= bound,
    }


def empirical_ratio(counts: ResidueCounts) -> float:
    """max_a pi(x; q, a) phi(q) log x / x"""
    return counts.max_count * counts.phi_q * math.log(counts.x) / counts.x


def default_curve_params(q: int, theta: Fraction | None = None) -> CurveParams:
    """theta = 0 for prime q and 7/64 otherwise unless given; delta = 0 and the pair (1/6, 2/3)"""
    if theta is None:
        theta = Fraction(0) if isprime(q) else THETA_KIM_SARNAK
    return CurveParams(theta=theta, delta=Fraction(0), pair=SMOOTH_DEFAULT_PAIR)


def bt_empirical(
    x: int,
    q: int,
    curve_id: str = 'burgess-like',
    params: CurveParams | None = None,
    counts: ResidueCounts | None = None,
) -> dict:
    """
    Report-only comparison of the empirical ratio with C(varpi) at varpi = log q / log x.

    Without params the curve is evaluated at default_curve_params(q).
    """
    _check_range(x, q, 2)
    counts = counts or _residue_counts(x, q, DEFAULT_SEGMENT_ODDS, 1)
    varpi = math.log(q) / math.log(x)
    value = eval_curve(curve_id, Fraction(varpi), params or default_curve_params(q))
    return {
        'x': x,
        'q': q,
        'varpi': varpi,
        'curve_id': curve_id,
        'ratio': empirical_ratio(counts),
        'c_value': None if value is None else float(value),
    }


def verification_grid(
    xs: list[int],
    q_max: int = 1000,
    segment_odds: int = DEFAULT_SEGMENT_ODDS,
    threads: int = 1,
) -> list[dict]:
    """
    mv_check over x in xs and 2 <= q <= min(q_max, x // 10); one sieve per x.

    Rows follow the summary schema `x,q,max_a,max_count,mv_bound,ratio` plus the pass flag.
    """
    rows = []
    for x in xs:
        primes = sieve_primes(x, segment_odds, threads).primes()
        for q in range(2, min(q_max, x // 10) + 1):
            counts = residue_counts_from_primes(primes, x, q)
            row = mv_check(x, q, counts)
            row['ratio'] = empirical_ratio(counts)
            rows.append(row)
        logger.info(f'Montgomery-Vaughan grid: x={x} done ({len(primes)} primes)')
    return rows
