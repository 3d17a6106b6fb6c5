"""
Exact A/B process calculus for arithmetic exponent pairs.
"""

import logging
from enum import StrEnum
from fractions import Fraction

from attr import dataclass

from btlab.domain.entities.exponent_pair import TRIVIAL_PAIR, ExponentPair, ProcessWord
from btlab.domain.errors import InvalidParameterError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class Objective(StrEnum):
    MIN_SUM = 'min-sum'
    MAX_F = 'max-f'
    MAX_G = 'max-g'


@dataclass(slots=True, frozen=True)
class OptimizationResult:
    objective: Objective
    word: ProcessWord
    pair: ExponentPair
    value: Fraction
    depth: int
    varpi: Fraction | None = None


def apply_A(p: ExponentPair) -> ExponentPair:
    scale = 2 * (p.kappa + 1)
    return ExponentPair(p.kappa / scale, (p.kappa + p.lam + 1) / scale, p.kappa / scale)


def apply_B(p: ExponentPair) -> ExponentPair:
    return ExponentPair(p.lam - HALF, p.kappa + HALF, p.lam + p.nu - p.kappa)


_STEPS = {'A': apply_A, 'B': apply_B}


def eval_word(word: ProcessWord | str) -> ExponentPair:
    """Compose the maps right to left, starting from (0, 1, 0)"""
    if isinstance(word, str):
        word = ProcessWord.from_string(word)
    pair = TRIVIAL_PAIR
    for letter in reversed(word.letters):
        pair = _STEPS[letter](pair)
    return pair


def akb_formula(k: int) -> ExponentPair:
    """
    Closed form (1/d, 1 - k/d, 1/d) with d = 2^(k+1) - 2.

    Index shift: eval_word('A' * k + 'B') == akb_formula(k + 1).
    """
    if k < 2:
        raise InvalidParameterError(f'akb_formula needs k >= 2, got {k}')
    d = 2 ** (k + 1) - 2
    return ExponentPair(Fraction(1, d), 1 - Fraction(k, d), Fraction(1, d))


def enumerate_pairs(max_length: int) -> list[tuple[ProcessWord, ExponentPair]]:
    """
    All distinct pairs reachable by canonical words of length <= max_length.

    Canonical words avoid the factor BB: B applied twice returns (kappa, lambda) unchanged and only raises nu.
    Each pair keeps its shortest witness, ties broken lexicographically with A < B.

    Returns:
        (word, pair) tuples ordered by word length, then word
    """
    if max_length < 0:
        raise InvalidParameterError(f'max_length must be >= 0, got {max_length}')

    witnesses: dict[ExponentPair, str] = {TRIVIAL_PAIR: ''}
    # state = (pair, whether the witness starts with B)
    frontier: dict[tuple[ExponentPair, bool], str] = {(TRIVIAL_PAIR, False): ''}
    seen = set(frontier)

    for length in range(1, max_length + 1):
        layer: dict[tuple[ExponentPair, bool], str] = {}
        for (pair, leads_with_b), word in frontier.items():
            for letter, step in _STEPS.items():
                if letter == 'B' and leads_with_b:
                    continue
                state = (step(pair), letter == 'B')
                if state in seen:
                    continue
                candidate = letter + word
                if state not in layer or candidate < layer[state]:
                    layer[state] = candidate
        seen.update(layer)
        for (pair, _), word in sorted(layer.items(), key=lambda item: item[1]):
            witnesses.setdefault(pair, word)
        frontier = layer
        logger.debug(f'length {length}: {len(layer)} new states, {len(witnesses)} distinct pairs')
        if not frontier:
            break

    found = [(ProcessWord(word), pair) for pair, word in witnesses.items()]
    return sorted(found, key=lambda item: item[0].sort_key())


def f_objective(p: ExponentPair) -> Fraction | None:
    """(1 + kappa - lambda) / (1 + 2 kappa - lambda); None where the denominator vanishes"""
    denominator = 1 + 2 * p.kappa - p.lam
    if denominator == 0:
        return None
    return (1 + p.kappa - p.lam) / denominator


def g_objective(p: ExponentPair, varpi: Fraction) -> Fraction:
    """(3 + kappa - lambda) - (3 + 2 kappa - lambda) varpi, so that C(varpi) = 4 / g"""
    return (3 + p.kappa - p.lam) - (3 + 2 * p.kappa - p.lam) * varpi


def _score(objective: Objective, pair: ExponentPair, varpi: Fraction | None) -> Fraction | None:
    if objective is Objective.MIN_SUM:
        return pair.total
    if objective is Objective.MAX_F:
        return f_objective(pair)
    return g_objective(pair, varpi)


def optimize(
    objective: Objective | str,
    max_length: int,
    varpi: Fraction | None = None,
) -> OptimizationResult:
    """
    Exhaustive search over enumerate_pairs(max_length).

    Args:
        objective: min-sum, max-f or max-g
        max_length: word length cap
        varpi: required for max-g only

    Returns:
        The optimum; ties go to the shorter word, then the lexicographically smaller one
    """
    objective = Objective(objective)
    if objective is Objective.MAX_G and varpi is None:
        raise InvalidParameterError('the max-g objective needs varpi')

    best = None
    best_key = None
    for word, pair in enumerate_pairs(max_length):
        value = _score(objective, pair, varpi)
        if value is None:
            continue
        signed = value if objective is Objective.MIN_SUM else -value
        key = (signed, len(word), word.letters)
        if best_key is None or key < best_key:
            best, best_key = (word, pair, value), key

    if best is None:
        raise InvalidParameterError(f'objective {objective} is undefined on every word up to length {max_length}')
    word, pair, value = best
    logger.info(f'{objective} at depth {max_length}: {word or "(empty)"} -> {value}')
    return OptimizationResult(objective, word, pair, value, max_length, varpi if objective is Objective.MAX_G else None)


def search_profile(max_depth: int) -> list[OptimizationResult]:
    """Best min-sum result at every depth 0..max_depth"""
    pairs = enumerate_pairs(max_depth)
    profile = []
    best = None
    for depth in range(max_depth + 1):
        for word, pair in pairs:
            if len(word) != depth:
                continue
            key = (pair.total, len(word), word.letters)
            if best is None or key < best[0]:
                best = (key, word, pair)
        _, word, pair = best
        profile.append(OptimizationResult(Objective.MIN_SUM, word, pair, pair.total, depth))
    return profile
