"""
Experiments behind `sums` and `verify-bt`.

Each experiment draws from the generator it is handed, so a fixed seed reproduces every report.
"""

import logging
import math
from fractions import Fraction

import numpy as np
from sympy import isprime

from btlab.constants import (
    CONGRUENCE_RELATIVE_ERROR,
    KL_MOMENT_RATIO,
    RESIDUE_TOLERANCE,
    RSTAR_RATIO,
    VP_BOUND,
)
from btlab.domain.base import IExperiment
from btlab.domain.entities.curve import CurveParams
from btlab.models import ExperimentReport
from btlab.services import arith_sums, characters, prime_counts
from btlab.utils.modular import (
    is_smooth_squarefree,
    mu,
    random_prime,
    random_smooth_modulus,
    random_squarefree_composite,
)

logger = logging.getLogger(__name__)


def _status(ok: bool) -> str:
    return 'passed' if ok else 'failed'


class WeilExperiment(IExperiment):
    name = 'weil'

    def __init__(self, prime_cases: int = 300, composite_cases: int = 100):
        self.prime_cases = prime_cases
        self.composite_cases = composite_cases

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        worst_prime = 0.0
        for _ in range(self.prime_cases):
            p = random_prime(rng, 3, 2003)
            m, n = (int(v) for v in rng.integers(1, p, size=2))
            worst_prime = max(worst_prime, abs(arith_sums.kloosterman(m, n, p)) / (2 * math.sqrt(p)))
        worst_composite = 0.0
        for _ in range(self.composite_cases):
            q = random_squarefree_composite(rng, 5000)
            m, n = (int(v) for v in rng.integers(0, q, size=2))
            ratio = abs(arith_sums.kloosterman(m, n, q)) / arith_sums.weil_bound(m, n, q)
            worst_composite = max(worst_composite, ratio)
        ok = worst_prime <= 1 + 1e-9 and worst_composite <= 1 + 1e-9
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'prime_cases': self.prime_cases, 'composite_cases': self.composite_cases},
            values={'max_prime_ratio': worst_prime, 'max_composite_ratio': worst_composite},
            thresholds={'ratio': 1.0},
        )


class RamanujanExperiment(IExperiment):
    name = 'ramanujan'

    def __init__(self, cases: int = 100):
        self.cases = cases

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        worst = 0.0
        for _ in range(self.cases):
            q = int(rng.integers(1, 500))
            m = int(rng.integers(0, 2000))
            worst = max(worst, abs(arith_sums.ramanujan(m, q)) / math.gcd(m, q))
        mobius_ok = all(abs(arith_sums.ramanujan(1, q) - mu(q)) < 1e-9 for q in range(1, 101))
        return ExperimentReport(
            name=self.name,
            status=_status(worst <= 1 + 1e-9 and mobius_ok),
            inputs={'cases': self.cases},
            values={'max_ratio_to_gcd': worst, 'mobius_identity_q_le_100': mobius_ok},
            thresholds={'ratio': 1.0},
        )


class SymmetryExperiment(IExperiment):
    name = 'symmetry'

    def __init__(self, cases: int = 100):
        self.cases = cases

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        worst_swap = 0.0
        worst_imag = 0.0
        for _ in range(self.cases):
            q = int(rng.integers(1, 1000))
            m, n = (int(v) for v in rng.integers(0, 10 * q, size=2))
            forward = arith_sums.kloosterman(m, n, q)
            worst_swap = max(worst_swap, abs(forward - arith_sums.kloosterman(n, m, q)))
            worst_imag = max(worst_imag, abs(forward.imag))
        ok = worst_swap < RESIDUE_TOLERANCE and worst_imag < RESIDUE_TOLERANCE
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'cases': self.cases},
            values={'max_swap_difference': worst_swap, 'max_imaginary_part': worst_imag},
            thresholds={'tolerance': RESIDUE_TOLERANCE},
        )


class CrtExperiment(IExperiment):
    name = 'crt'

    def __init__(self, cases: int = 60):
        self.cases = cases

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        worst = 0.0
        checked = 0
        while checked < self.cases:
            q1, q2 = (int(v) for v in rng.integers(2, 51, size=2))
            if math.gcd(q1, q2) != 1:
                continue
            m, n = (int(v) for v in rng.integers(0, q1 * q2, size=2))
            direct = arith_sums.kloosterman(m, n, q1 * q2)
            worst = max(worst, abs(direct - arith_sums.kloosterman_crt(m, n, q1, q2)))
            checked += 1
        return ExperimentReport(
            name=self.name,
            status=_status(worst < 1e-8),
            inputs={'cases': self.cases, 'max_factor': 50},
            values={'max_difference': worst},
            thresholds={'tolerance': 1e-8},
        )


class KloostermanTableExperiment(IExperiment):
    name = 'kl-table'

    def __init__(self, primes: tuple[int, ...] = (101, 499, 1009), samples: int = 10):
        self.primes = primes
        self.samples = samples

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        per_prime = {}
        ok = True
        for p in self.primes:
            table = arith_sums.kloosterman_table(p)
            xs = [1, 2, p - 1, *(int(v) for v in rng.integers(0, p, size=self.samples))]
            difference = max(abs(table[x] - arith_sums.kloosterman(x, 1, p).real / math.sqrt(p)) for x in xs)
            max_abs = float(np.max(np.abs(table.values[1:])))
            zero_ok = abs(table[0] + 1 / math.sqrt(p)) < RESIDUE_TOLERANCE
            ok &= difference < RESIDUE_TOLERANCE and max_abs <= 2 and zero_ok
            per_prime[str(p)] = {'max_direct_difference': difference, 'max_abs_kl': max_abs, 'kl_zero_ok': zero_ok}
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'primes': list(self.primes), 'samples': self.samples},
            values=per_prime,
            thresholds={'tolerance': RESIDUE_TOLERANCE, 'weil': 2.0},
        )


class VpExperiment(IExperiment):
    name = 'vp'

    def __init__(self, primes: tuple[int, ...] = (101, 211, 401, 809), pairs_per_prime: int = 3):
        self.primes = primes
        self.pairs_per_prime = pairs_per_prime

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        per_prime = {}
        ok = True
        for p in self.primes:
            table = arith_sums.kloosterman_table(p)
            plancherel = 0.0
            max_v = 0.0
            for _ in range(self.pairs_per_prime):
                a = int(rng.integers(1, p))
                b = int(rng.integers(1, p - 1))
                b = b if b < a else b + 1
                v = arith_sums.vp_transform(p, a, b, table)
                x = np.arange(p)
                energy = float(np.sum((table.at(a * x) * table.at(b * x)) ** 2))
                plancherel = max(plancherel, abs(float(np.sum(np.abs(v) ** 2)) - energy))
                max_v = max(max_v, float(np.max(np.abs(v))))
            diagonal = arith_sums.vp_transform(p, 1, 1, table)[0]
            diagonal_ok = abs(diagonal - (p - 1) / math.sqrt(p)) < 1e-8
            ok &= plancherel < 1e-8 and max_v <= VP_BOUND and diagonal_ok
            per_prime[str(p)] = {
                'plancherel_difference': plancherel,
                'max_abs_v_distinct': max_v,
                'v_zero_diagonal': float(diagonal.real),
                'sqrt_p': math.sqrt(p),
            }
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'primes': list(self.primes), 'pairs_per_prime': self.pairs_per_prime},
            values=per_prime,
            thresholds={'max_abs_v': VP_BOUND, 'plancherel': 1e-8},
        )


class MomentExperiment(IExperiment):
    name = 'moments'

    def __init__(self, p: int = 499, subset_size: int = 20):
        self.p = p
        self.subset_size = subset_size

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        first_moment, first_ratio = arith_sums.kl_moment(101, 1, [1])
        subset = rng.choice(np.arange(1, self.p + 1), size=self.subset_size, replace=False)
        signs = rng.choice([-1.0, 1.0], size=self.subset_size)
        second_moment, second_ratio = arith_sums.kl_moment(self.p, 2, subset, signs)
        ok = first_ratio <= 2 and abs(first_moment - 100) < 1e-8 and second_ratio <= KL_MOMENT_RATIO
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'p': self.p, 'subset_size': self.subset_size},
            values={
                'nu1_p101_moment': first_moment,
                'nu1_p101_ratio': first_ratio,
                'nu2_moment': second_moment,
                'nu2_ratio': second_ratio,
            },
            thresholds={'nu1_ratio': 2.0, 'nu2_ratio': KL_MOMENT_RATIO},
        )


class LargeSieveExperiment(IExperiment):
    name = 'large-sieve'

    def __init__(self, cases: int = 200):
        self.cases = cases

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        failures = 0
        disagreements = 0
        worst = 0.0
        for _ in range(self.cases):
            q = int(rng.integers(1, 101))
            N = int(rng.integers(1, 301))
            start = int(rng.integers(1, 1000))
            alpha = rng.normal(size=N) + 1j * rng.normal(size=N)
            result = arith_sums.large_sieve_check(q, alpha, start)
            failures += not result['pass']
            disagreements += not result['routes_agree']
            worst = max(worst, result['lhs'] / result['rhs'])
        return ExperimentReport(
            name=self.name,
            status=_status(failures == 0 and disagreements == 0),
            inputs={'cases': self.cases, 'q_max': 100, 'N_max': 300},
            values={'failures': failures, 'route_disagreements': disagreements, 'max_lhs_over_rhs': worst},
            thresholds={'constant': 1.0},
        )


class CharacterExperiment(IExperiment):
    name = 'characters'

    def __init__(self, q_max: int = 50):
        self.q_max = q_max

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        worst = 0.0
        for q in range(1, self.q_max + 1):
            worst = max(worst, *characters.orthogonality_errors(characters.build_character_group(q)))
        return ExperimentReport(
            name=self.name,
            status=_status(worst < RESIDUE_TOLERANCE),
            inputs={'q_max': self.q_max},
            values={'max_orthogonality_error': worst},
            thresholds={'tolerance': RESIDUE_TOLERANCE},
        )


class IncompleteCharacterExperiment(IExperiment):
    name = 'incomplete-char'

    def __init__(self, eta: float = 0.25):
        self.eta = eta

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        prime_group = characters.build_character_group(1009)
        quadratic = characters.quadratic_character(prime_group)
        short = arith_sums.incomplete_char_sum(prime_group, quadratic, 1, 100)
        full = arith_sums.incomplete_char_sum(prime_group, quadratic, 1, 1009)
        pv_bound = arith_sums.polya_vinogradov_bound(1009)

        q = random_smooth_modulus(rng, 13, self.eta)
        smooth_group = characters.build_character_group(q)
        index = characters.nontrivial_index(smooth_group)
        length = max(2, round(q**0.4))
        start = int(rng.integers(0, q))
        smooth = arith_sums.incomplete_char_sum(smooth_group, index, start, length)
        pair = arith_sums.SMOOTH_DEFAULT_PAIR
        smooth_ok = is_smooth_squarefree(q, self.eta)
        ok = short['abs_sum'] <= pv_bound and full['abs_sum'] < 1e-6 and smooth_ok
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'prime_modulus': 1009, 'smooth_modulus': q, 'smooth_length': length, 'smooth_start': start},
            values={
                'quadratic_abs_sum_1_100': short['abs_sum'],
                'quadratic_full_period': full['abs_sum'],
                'quadratic_burgess_ratios': short['burgess_ratios'],
                'smooth_modulus_ok': smooth_ok,
                'smooth_abs_sum': smooth['abs_sum'],
                'smooth_pair_ratio': arith_sums.smooth_pair_ratio(smooth['sum'], length, q, pair),
                'smooth_burgess_ratios': smooth['burgess_ratios'],
            },
            thresholds={'polya_vinogradov': pv_bound},
        )


class IncompleteKloostermanExperiment(IExperiment):
    name = 'incomplete-kloosterman'

    def __init__(self, q: int = 30030, cases: int = 500):
        self.q = q
        self.cases = cases

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        single = arith_sums.incomplete_kloosterman(1, self.q, 1, 3000)
        rows = arith_sums.rstar_scan(self.q, self.cases, rng)
        max_ratio = max(row['rstar_ratio'] for row in rows)
        ok = single['abs_sum'] <= single['completion_bound'] and max_ratio <= RSTAR_RATIO
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'q': self.q, 'cases': self.cases},
            values={
                'h1_len3000_abs_sum': single['abs_sum'],
                'completion_bound': single['completion_bound'],
                'max_rstar_ratio': max_ratio,
                'max_smooth_ratio': max(row['smooth_ratio'] for row in rows),
                'scan': rows,
            },
            thresholds={'rstar_ratio': RSTAR_RATIO},
        )


class CongruenceExperiment(IExperiment):
    name = 'congruence'

    def __init__(self, q: int = 53, M: int = 20, Ns: tuple[int, ...] = (200, 400)):
        self.q = q
        self.M = M
        self.Ns = Ns

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        errors = [arith_sums.congruence_count(self.q, self.M, N).relative_error for N in self.Ns]
        decreasing = all(later < earlier for earlier, later in zip(errors, errors[1:]))
        ok = all(error <= CONGRUENCE_RELATIVE_ERROR for error in errors) and decreasing
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'q': self.q, 'M': self.M, 'N': list(self.Ns)},
            values={'relative_errors': errors, 'decreasing': decreasing},
            thresholds={'relative_error': CONGRUENCE_RELATIVE_ERROR},
        )


class SieveAgreementExperiment(IExperiment):
    name = 'sieve-agreement'

    def __init__(
        self,
        limits: tuple[int, ...] = (10**3, 10**4, 10**5, 10**6),
        threads: int = 1,
        segment_odds: int = prime_counts.DEFAULT_SEGMENT_ODDS,
    ):
        self.limits = limits
        self.threads = threads
        self.segment_odds = segment_odds

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        values = {}
        ok = True
        for x in self.limits:
            segmented = prime_counts.sieve_primes(x, self.segment_odds, self.threads)
            pi_segmented = segmented.count()
            pi_simple = int(np.count_nonzero(prime_counts.simple_sieve(x)))
            primes = segmented.primes()
            q = int(rng.integers(2, min(1000, x // 10) + 1))
            counts = prime_counts.residue_counts_from_primes(primes, x, q)
            dividing = sum(1 for p in primes[:q] if q % int(p) == 0)
            partition_ok = counts.total + dividing == pi_segmented and len(counts.counts) == counts.phi_q
            ok &= pi_segmented == pi_simple and partition_ok
            values[str(x)] = {'segmented': pi_segmented, 'simple': pi_simple, 'q': q, 'partition_ok': partition_ok}
        return ExperimentReport(
            name=self.name,
            status=_status(ok),
            inputs={'limits': list(self.limits)},
            values=values,
        )


class MontgomeryVaughanExperiment(IExperiment):
    name = 'mv-grid'

    def __init__(
        self,
        xs: tuple[int, ...] = (10**4, 10**5, 10**6, 10**7),
        q_max: int = 1000,
        threads: int = 1,
        segment_odds: int = prime_counts.DEFAULT_SEGMENT_ODDS,
    ):
        self.xs = xs
        self.q_max = q_max
        self.threads = threads
        self.segment_odds = segment_odds

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        rows = prime_counts.verification_grid(list(self.xs), self.q_max, self.segment_odds, self.threads)
        failures = [(row['x'], row['q']) for row in rows if not row['pass']]
        return ExperimentReport(
            name=self.name,
            status=_status(not failures),
            inputs={'xs': list(self.xs), 'q_max': self.q_max},
            values={
                'checked': len(rows),
                'rows': rows,
                'failures': failures,
                'max_count_over_bound': max((row['max_count'] / row['mv_bound'] for row in rows), default=0.0),
            },
        )


class EmpiricalRatioExperiment(IExperiment):
    """Report-only: max_a pi(x; q, a) phi(q) log x / x next to a catalog curve at varpi = log q / log x"""
    name = 'bt-empirical'

    def __init__(
        self,
        xs: tuple[int, ...] = (10**6,),
        qs: tuple[int, ...] | None = None,
        curve_id: str = 'burgess-like',
        theta: Fraction | None = None,
        threads: int = 1,
        segment_odds: int = prime_counts.DEFAULT_SEGMENT_ODDS,
    ):
        self.xs = xs
        self.qs = qs
        self.curve_id = curve_id
        self.theta = theta
        self.threads = threads
        self.segment_odds = segment_odds

    def _params(self, q: int) -> CurveParams:
        return prime_counts.default_curve_params(q, self.theta)

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        rows = []
        for x in self.xs:
            primes = prime_counts.sieve_primes(x, self.segment_odds, self.threads).primes()
            for q in self.qs or (101, _prime_near(round(x**0.47))):
                if not 2 <= q < x:
                    logger.warning(f'bt-empirical: skipping q={q} outside [2, {x})')
                    continue
                counts = prime_counts.residue_counts_from_primes(primes, x, q)
                rows.append(prime_counts.bt_empirical(x, q, self.curve_id, self._params(q), counts))
        small_q_ok = all(row['ratio'] > 0.5 for row in rows if row['q'] ** 3 <= row['x'])
        return ExperimentReport(
            name=self.name,
            status='report' if small_q_ok else 'failed',
            inputs={'xs': list(self.xs), 'qs': None if self.qs is None else list(self.qs), 'curve_id': self.curve_id},
            values={'rows': rows},
            thresholds={'small_q_ratio_floor': 0.5},
        )


def _prime_near(n: int) -> int:
    candidate = max(2, n)
    while not isprime(candidate):
        candidate += 1
    return candidate


def default_experiments(
    threads: int = 1,
    eta: float = 0.25,
    segment_odds: int = prime_counts.DEFAULT_SEGMENT_ODDS,
    overrides: dict[str, IExperiment] | None = None,
) -> list[IExperiment]:
    """The full registry in its fixed order; `overrides` swaps in configured instances by name"""
    overrides = overrides or {}
    registry = [
        WeilExperiment(),
        RamanujanExperiment(),
        SymmetryExperiment(),
        CrtExperiment(),
        KloostermanTableExperiment(),
        VpExperiment(),
        MomentExperiment(),
        LargeSieveExperiment(),
        CharacterExperiment(),
        IncompleteCharacterExperiment(eta),
        IncompleteKloostermanExperiment(),
        CongruenceExperiment(),
        SieveAgreementExperiment(threads=threads, segment_odds=segment_odds),
        MontgomeryVaughanExperiment(threads=threads, segment_odds=segment_odds),
        EmpiricalRatioExperiment(threads=threads, segment_odds=segment_odds),
    ]
    return [overrides.get(experiment.name, experiment) for experiment in registry]


SUM_EXPERIMENTS = (
    'weil', 'ramanujan', 'symmetry', 'crt', 'kl-table', 'vp', 'moments', 'large-sieve', 'characters',
    'incomplete-char', 'incomplete-kloosterman', 'congruence',
)
PRIME_EXPERIMENTS = ('sieve-agreement', 'mv-grid', 'bt-empirical')

