"""
Exponential and character sums: Kloosterman and Ramanujan sums, the V_p transform, Kloosterman moments,
large-sieve orthogonality, incomplete sums and the bilinear congruence count.
"""

import logging
import math
from fractions import Fraction
from collections.abc import Callable

import numpy as np
from sympy import isprime

from btlab.constants import RESIDUE_TOLERANCE
from btlab.domain.entities.characters import CharacterGroup, CharacterIndex
from btlab.domain.entities.exponent_pair import ExponentPair
from btlab.domain.entities.sums import CongruenceCount, KloostermanTable
from btlab.domain.errors import InvalidParameterError, InvariantViolation, NumericalResidueError
from btlab.services.characters import build_character_group, character_matrix
from btlab.utils.modular import check_modulus, coprime_mask, mod_inverse, phi, tau, unit_inverses
from btlab.utils.transforms import prime_dft

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * np.pi
SMOOTH_DEFAULT_PAIR = ExponentPair(Fraction(1, 6), Fraction(2, 3), Fraction(1, 6))


def _e(numerators: np.ndarray, q: int) -> np.ndarray:
    """e(x / q) with x reduced mod q first"""
    return np.exp(TWO_PI_I * np.mod(numerators, q) / q)


def kloosterman(m: int, n: int, q: int) -> complex:
    """S(m, n; q) by direct summation over the units mod q"""
    q = check_modulus(q)
    inverses = unit_inverses(q)
    units = np.flatnonzero(inverses >= 0)
    phases = (m % q) * units + (n % q) * inverses[units]
    return complex(_e(phases, q).sum())


def kloosterman_crt(m: int, n: int, q1: int, q2: int) -> complex:
    """S(m, n; q1 q2) = S(m conj(q2)^2, n; q1) * S(m conj(q1)^2, n; q2) for coprime q1, q2"""
    if math.gcd(q1, q2) != 1:
        raise InvalidParameterError(f'moduli {q1} and {q2} are not coprime')
    left = kloosterman(m * mod_inverse(q2, q1) ** 2, n, q1)
    right = kloosterman(m * mod_inverse(q1, q2) ** 2, n, q2)
    return left * right


def weil_bound(m: int, n: int, q: int) -> float:
    """sqrt(q) * gcd(m, n, q)^(1/2) * tau(q)"""
    return math.sqrt(q) * math.sqrt(math.gcd(m, n, q)) * tau(q)


def ramanujan(m: int, q: int) -> float:
    """S(m, 0; q); raises InvariantViolation if |S| > gcd(m, q)"""
    value = kloosterman(m, 0, q)
    if abs(value.imag) > RESIDUE_TOLERANCE * max(1, q):
        raise NumericalResidueError(f'Ramanujan sum S({m},0;{q}) has imaginary part {value.imag}')
    bound = math.gcd(m, q)
    if abs(value.real) > bound + 1e-9:
        raise InvariantViolation(f'|S({m},0;{q})| = {abs(value.real)} exceeds gcd = {bound}')
    return float(value.real)


def kloosterman_table(p: int) -> KloostermanTable:
    """
    Kl(x, p) for all x through one prime-length transform.

    S(x, 1; p) = sum_a g(a) e(a x / p) with g(a) = e(conj(a) / p) and g(0) = 0.
    """
    if p < 3 or not isprime(p):
        raise InvalidParameterError(f'kloosterman_table needs a prime p >= 3, got {p}')
    inverses = unit_inverses(p)
    g = np.zeros(p, dtype=np.complex128)
    g[1:] = _e(inverses[1:], p)
    normalized = prime_dft(g, sign=1) / math.sqrt(p)
    residue = float(np.max(np.abs(normalized.imag)))
    if residue >= RESIDUE_TOLERANCE:
        raise NumericalResidueError(f'Kloosterman table mod {p} left imaginary residue {residue:.3g}')
    values = normalized.real
    logger.debug(f'Kloosterman table mod {p}: max |Kl| = {np.max(np.abs(values[1:])):.6f}')
    return KloostermanTable(p=p, values=values)


def vp_transform(p: int, a: int, b: int, table: KloostermanTable | None = None) -> np.ndarray:
    """
    V_p(y; a, b) = p^(-1/2) sum_x Kl(a x) Kl(b x) e(-y x / p) for y = 0..p-1.

    Complex in general: conj(V_p(y)) = V_p(-y). Real at y = 0.
    """
    if a % p == 0 or b % p == 0:
        raise InvalidParameterError(f'a and b must be nonzero mod {p}, got a={a}, b={b}')
    table = table or kloosterman_table(p)
    if table.p != p:
        raise InvalidParameterError(f'table is mod {table.p}, not mod {p}')
    x = np.arange(p)
    product = table.at(a * x) * table.at(b * x)
    return prime_dft(product, sign=-1) / math.sqrt(p)


def kl_moment(
    p: int,
    nu: int,
    subset: np.ndarray | list[int],
    beta: np.ndarray | list[float] | None = None,
    table: KloostermanTable | None = None,
) -> tuple[float, float]:
    """
    moment = sum_m |sum_{n in subset} beta_n Kl(m n)|^(2 nu), ratio = moment / (|N|^nu p + |N|^(2 nu) sqrt(p))
    """
    if nu < 1:
        raise InvalidParameterError(f'nu must be >= 1, got {nu}')
    subset = np.asarray(subset, dtype=np.int64)
    if len(subset) == 0:
        return 0.0, 0.0
    beta = np.ones(len(subset)) if beta is None else np.asarray(beta, dtype=float)
    if np.max(np.abs(beta)) > 1:
        raise InvalidParameterError('coefficients must satisfy |beta_n| <= 1')
    table = table or kloosterman_table(p)
    m = np.arange(p)
    inner = table.at(np.outer(m, subset)) @ beta
    moment = float(np.sum(np.abs(inner) ** (2 * nu)))
    size = len(subset)
    ratio = moment / (size**nu * p + size ** (2 * nu) * math.sqrt(p))
    return moment, ratio


def large_sieve_check(q: int, alpha: np.ndarray, start: int = 1) -> dict:
    """
    Character-sum side of the large sieve with constant 1.

    lhs = sum_chi |sum_n alpha_n chi(n)|^2 over n = start .. start + N - 1, rhs = (N + q) ||alpha||^2. lhs is also
    evaluated by orthogonality as phi(q) * sum_{m = n mod q, (mn, q) = 1} alpha_m conj(alpha_n).
    """
    q = check_modulus(q)
    alpha = np.asarray(alpha, dtype=np.complex128)
    N = len(alpha)
    n = np.arange(start, start + N)
    group = build_character_group(q)

    lhs = float(np.sum(np.abs(character_matrix(group)[:, n % q] @ alpha) ** 2))

    mask = coprime_mask(q, n)
    class_sums = np.zeros(q, dtype=np.complex128)
    np.add.at(class_sums, n[mask] % q, alpha[mask])
    identity = group.phi * float(np.sum(np.abs(class_sums) ** 2))

    rhs = (N + q) * float(np.sum(np.abs(alpha) ** 2))
    return {
        'q': q,
        'N': N,
        'lhs': float(lhs),
        'lhs_identity': identity,
        'rhs': rhs,
        'routes_agree': abs(lhs - identity) <= 1e-9 * max(1.0, rhs),
        'pass': lhs <= rhs * (1 + 1e-12) + 1e-12,
    }


def burgess_ratios(total: complex, length: int, q: int) -> dict[int, float]:
    """|sum| / (|I|^(1 - 1/r) q^((r+1)/(4 r^2))) for r = 1, 2, 3"""
    return {r: abs(total) / (length ** (1 - 1 / r) * q ** ((r + 1) / (4 * r * r))) for r in (1, 2, 3)}


def polya_vinogradov_bound(q: int) -> float:
    return math.sqrt(q) * math.log(q)


def incomplete_char_sum(group: CharacterGroup, chi_index: CharacterIndex, start: int, length: int) -> dict:
    """sum of chi(n) over n = start .. start + length - 1, with Burgess diagnostics"""
    if group.is_trivial(chi_index):
        raise InvalidParameterError('incomplete_char_sum needs a non-trivial character')
    if length < 1:
        raise InvalidParameterError(f'interval length must be >= 1, got {length}')
    n = np.arange(start, start + length)
    total = complex(np.sum(group.evaluate(chi_index, n)))
    return {
        'q': group.q,
        'index': list(chi_index),
        'start': start,
        'length': length,
        'sum': total,
        'abs_sum': abs(total),
        'burgess_ratios': burgess_ratios(total, length, group.q),
    }


def smooth_pair_ratio(total: complex, length: int, q: int, pair: ExponentPair, h: int | None = None) -> float:
    """|sum| / (q^kappa |I|^(lambda - kappa) (h, q)^nu); the gcd factor is dropped when h is None"""
    kappa, lam, nu = float(pair.kappa), float(pair.lam), float(pair.nu)
    gcd_factor = 1.0 if h is None else math.gcd(h, q) ** nu
    return abs(total) / (q**kappa * length ** (lam - kappa) * gcd_factor)


def incomplete_kloosterman(
    h: int,
    q: int,
    start: int,
    length: int,
    pair: ExponentPair | None = None,
    inverses: np.ndarray | None = None,
) -> dict:
    """
    sum_{n in I, (n, q) = 1} e(h conj(n) / q) with the R* and exponent-pair ratios.

    Args:
        h: frequency
        q: modulus
        start, length: the interval I = [start, start + length)
        pair: exponent pair for the smooth-moduli ratio, (1/6, 2/3, 1/6) when absent
        inverses: precomputed unit_inverses(q) for sweeps
    """
    q = check_modulus(q, 2)
    if not 1 < length <= q:
        raise InvalidParameterError(f'need 1 < |I| <= q, got |I| = {length}, q = {q}')
    pair = pair or SMOOTH_DEFAULT_PAIR
    inverses = unit_inverses(q) if inverses is None else inverses
    residues = np.arange(start, start + length) % q
    conj = inverses[residues]
    conj = conj[conj >= 0]
    total = complex(_e((h % q) * conj, q).sum())
    g = math.gcd(h, q)
    return {
        'q': q,
        'h': h,
        'interval_start': start,
        'interval_len': length,
        'sum': total,
        'abs_sum': abs(total),
        'rstar_ratio': abs(total) / (math.sqrt(length) * math.sqrt(g)),
        'smooth_ratio': smooth_pair_ratio(total, length, q, pair, h),
        'completion_bound': tau(q) * math.sqrt(q) * (2 + math.log(q)),
    }


def rstar_scan(
    q: int,
    cases: int,
    rng: np.random.Generator,
    pair: ExponentPair | None = None,
) -> list[dict]:
    """Random (h, I) cases mod q, one CSV-ready row each"""
    inverses = unit_inverses(q)
    rows = []
    for _ in range(cases):
        h = int(rng.integers(1, q))
        length = int(rng.integers(2, q + 1))
        start = int(rng.integers(0, q))
        result = incomplete_kloosterman(h, q, start, length, pair, inverses)
        rows.append({key: result[key] for key in (
            'q', 'h', 'interval_start', 'interval_len', 'abs_sum', 'rstar_ratio', 'smooth_ratio'
        )})
    logger.info(f'R* scan mod {q}: {cases} cases, max ratio {max(row["rstar_ratio"] for row in rows):.4f}')
    return rows


def bump(t: np.ndarray) -> np.ndarray:
    """exp(-1 / ((t - 1)(2 - t))) on (1, 2), zero outside"""
    t = np.asarray(t, dtype=float)
    inside = (t > 1) & (t < 2)
    out = np.zeros_like(t)
    out[inside] = np.exp(-1 / ((t[inside] - 1) * (2 - t[inside])))
    return out


def bump_integral(points: int = 20001) -> float:
    """Integral of the bump over (1, 2) by a Riemann sum on a uniform grid"""
    t = np.linspace(1, 2, points)
    return float(np.sum(bump(t)) * (t[1] - t[0]))


Weight = Callable[[np.ndarray, np.ndarray], np.ndarray]


def product_bump(N: int) -> tuple[Weight, float]:
    """F(y, z) = w(y / N) w(z / N) and its exact double integral"""
    integral = bump_integral()
    return (lambda y, z: np.outer(bump(y / N), bump(z / N))), (N * integral) ** 2


def congruence_count(
    q: int,
    M: int,
    N: int,
    alpha: np.ndarray | None = None,
    beta: np.ndarray | None = None,
    weight: tuple[Weight, float] | None = None,
    method: str = 'classes',
) -> CongruenceCount:
    """
    R = sum alpha_{m1} beta_{m2} F(n1, n2) over m1 n1 = m2 n2 mod q, all four coprime to q.

    The `classes` method groups (m, n) by the residue of m n, which gives the same sum as the literal quadruple
    loop (`brute`). main term = phi(q) / q^2 * (sum alpha)(sum beta) over coprime m * double integral of F.
    """
    q = check_modulus(q)
    if M * N <= q:
        raise InvalidParameterError(f'need M N > q, got M N = {M * N}, q = {q}')
    m = np.arange(M + 1, 2 * M + 1)
    n = np.arange(N + 1, 2 * N + 1)
    alpha = np.ones(M) if alpha is None else np.asarray(alpha, dtype=float)
    beta = np.ones(M) if beta is None else np.asarray(beta, dtype=float)
    if len(alpha) != M or len(beta) != M:
        raise InvalidParameterError(f'alpha and beta must have length M = {M}')
    F, integral = weight or product_bump(N)
    values = F(n, n)

    m_ok = coprime_mask(q, m)
    n_ok = coprime_mask(q, n)
    alpha = np.where(m_ok, alpha, 0.0)
    beta = np.where(m_ok, beta, 0.0)

    if method == 'brute':
        exact = 0.0
        for i1 in range(M):
            for i2 in range(M):
                if not alpha[i1] or not beta[i2]:
                    continue
                for j1 in np.flatnonzero(n_ok):
                    matches = n_ok & ((m[i2] * n) % q == (m[i1] * n[j1]) % q)
                    exact += alpha[i1] * beta[i2] * float(values[j1, matches].sum())
    elif method == 'classes':
        residues = np.outer(m, n) % q
        A = np.zeros((q, N))
        B = np.zeros((q, N))
        columns = np.broadcast_to(np.arange(N), residues.shape)
        np.add.at(A, (residues, columns), alpha[:, None] * n_ok[None, :])
        np.add.at(B, (residues, columns), beta[:, None] * n_ok[None, :])
        exact = float(np.sum((A @ values) * B))
    else:
        raise InvalidParameterError(f'unknown method {method!r}')

    main_term = phi(q) / q**2 * float(alpha.sum()) * float(beta.sum()) * integral
    logger.info(f'Congruence count q={q} M={M} N={N}: R={exact:.6g}, main term={main_term:.6g}')
    return CongruenceCount(q=q, M=M, N=N, alpha=alpha, beta=beta, R_exact=exact, main_term=main_term)
