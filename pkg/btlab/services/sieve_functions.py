"""
Linear-sieve functions F and f.

u(s) = s F(s) and v(s) = s f(s) satisfy u = 2 e^gamma, v = 0 on (0, 2] and u' = f(s - 1), v' = F(s - 1) beyond.
The right-hand sides only involve already tabulated values, so each step is a quadrature; Simpson's rule is the
classical fourth-order step for this case. The grid is aligned with the integers, where the solutions lose
smoothness, and midpoints of the delayed argument are interpolated inside a single unit interval.
"""

import logging
import math

import numpy as np

from btlab.domain.entities.sieve_table import EULER_GAMMA, SieveTable
from btlab.domain.errors import InvalidParameterError
from btlab.utils.rationals import significant

logger = logging.getLogger(__name__)

TWO_E_GAMMA = 2 * math.exp(EULER_GAMMA)
MAX_STEP = 0.01

# cubic Lagrange weights for a half-integer point, keyed by its offset from the first of four nodes
_HALF_POINT_WEIGHTS = {
    0: np.array([5, 15, -5, 1]) / 16,
    1: np.array([-1, 9, 9, -1]) / 16,
    2: np.array([1, -5, 15, 5]) / 16,
}


def closed_F(s: float) -> float:
    """2 e^gamma / s, exact for 0 < s <= 3"""
    return TWO_E_GAMMA / s


def closed_f(s: float) -> float:
    """0 on (0, 2], 2 e^gamma log(s - 1) / s on [2, 4]"""
    return 0.0 if s <= 2 else TWO_E_GAMMA * math.log(s - 1) / s


def _delayed(values: np.ndarray, half_index: int, per_unit: int, h: float, closed) -> float:
    """
    Value at t = 2 + half_index * h / 2, looked up from a partially filled table.

    half_index <= 0 means t <= 2, where the closed form holds.
    """
    if half_index <= 0:
        return closed(2 + half_index * h / 2)
    if half_index % 2 == 0:
        return float(values[half_index // 2])
    j = (half_index - 1) // 2
    block_start = (j // per_unit) * per_unit
    start = min(max(j - 1, block_start), block_start + per_unit - 3)
    return float(_HALF_POINT_WEIGHTS[j - start] @ values[start:start + 4])


def solve(s_max: float = 10.0, step: float = 0.001) -> SieveTable:
    """
    Tabulate F and f on 2 <= s <= s_max.

    The effective step is 1 / ceil(1 / step), so integers are grid points.

    Args:
        s_max: upper end of the table (>= 2)
        step: requested step, 0 < step <= 0.01

    Returns:
        SieveTable over the aligned grid
    """
    if not 0 < step <= MAX_STEP:
        raise InvalidParameterError(f'step must lie in (0, {MAX_STEP}], got {step}')
    if s_max < 2:
        raise InvalidParameterError(f's_max must be >= 2, got {s_max}')

    per_unit = math.ceil(1 / step - 1e-9)
    h = 1 / per_unit
    n = math.ceil((s_max - 2) * per_unit - 1e-9)
    s_values = 2 + np.arange(n + 1) * h

    F = np.empty(n + 1)
    f = np.empty(n + 1)
    u = TWO_E_GAMMA
    v = 0.0
    F[0], f[0] = u / 2, v / 2

    for i in range(n):
        base = 2 * (i - per_unit)
        f_left, f_mid, f_right = (_delayed(f, base + k, per_unit, h, closed_f) for k in (0, 1, 2))
        F_left, F_mid, F_right = (_delayed(F, base + k, per_unit, h, closed_F) for k in (0, 1, 2))
        u += h / 6 * (f_left + 4 * f_mid + f_right)
        v += h / 6 * (F_left + 4 * F_mid + F_right)
        F[i + 1] = u / s_values[i + 1]
        f[i + 1] = v / s_values[i + 1]

    logger.info(f'Sieve functions tabulated on [2, {s_values[-1]:.4f}] with step {h:.6g} ({n + 1} points)')
    return SieveTable(s_max=float(s_max), step=h, s_values=s_values, F_values=F, f_values=f)


def _check_argument(table: SieveTable, s: float) -> None:
    if not 0 < s <= table.s_max + 1e-12:
        raise InvalidParameterError(f's must lie in (0, {table.s_max}], got {s}')


def F_of(table: SieveTable, s: float) -> float:
    _check_argument(table, s)
    if s <= 2:
        return closed_F(s)
    return float(np.interp(s, table.s_values, table.F_values))


def f_of(table: SieveTable, s: float) -> float:
    _check_argument(table, s)
    if s <= 2:
        return 0.0
    return float(np.interp(s, table.s_values, table.f_values))


def sieve_level_report(table: SieveTable, level: float, sifting_limit: float) -> dict[str, float]:
    """F and f at s = log D / log z"""
    s = math.log(level) / math.log(sifting_limit)
    return {'s': s, 'F': F_of(table, s), 'f': f_of(table, s)}


def csv_rows(table: SieveTable, every: int = 1) -> list[dict[str, str]]:
    """Rows `s,F,f` with 12 significant digits"""
    if every < 1:
        raise InvalidParameterError(f'every must be >= 1, got {every}')
    indices = list(range(0, len(table), every))
    if indices[-1] != len(table) - 1:
        indices.append(len(table) - 1)
    return [
        {
            's': significant(table.s_values[i], 12),
            'F': significant(table.F_values[i], 12),
            'f': significant(table.f_values[i], 12),
        }
        for i in indices
    ]
