"""
Dirichlet character groups from primitive roots and discrete-log tables.
"""

import logging
import math
from functools import lru_cache

import numpy as np
from sympy import factorint, primitive_root

from btlab.domain.entities.characters import CharacterGroup, CharacterIndex
from btlab.domain.errors import InvalidParameterError, InvariantViolation
from btlab.utils.modular import check_modulus, coprime_mask, phi

logger = logging.getLogger(__name__)


def _cyclic_logs(modulus: int, generator: int, order: int) -> np.ndarray:
    table = np.full(modulus, -1, dtype=np.int64)
    value = 1
    for j in range(order):
        table[value] = j
        value = value * generator % modulus
    return table


def _prime_power_factors(p: int, e: int) -> list[tuple[int, np.ndarray]]:
    """(order, log table mod p^e) for each cyclic factor of (Z/p^e)^*"""
    modulus = p**e
    if p != 2:
        order = modulus - modulus // p
        return [(order, _cyclic_logs(modulus, primitive_root(modulus), order))]
    if e == 1:
        return []
    if e == 2:
        return [(2, _cyclic_logs(4, 3, 2))]
    # (Z/2^e)^* = <-1> x <5>
    sign = np.full(modulus, -1, dtype=np.int64)
    power = np.full(modulus, -1, dtype=np.int64)
    half = modulus // 4
    value = 1
    for b in range(half):
        sign[value], power[value] = 0, b
        sign[modulus - value], power[modulus - value] = 1, b
        value = value * 5 % modulus
    return [(2, sign), (half, power)]


@lru_cache(maxsize=32)
def build_character_group(q: int) -> CharacterGroup:
    """
    All phi(q) characters mod q as index tuples.

    Each prime power p^e of q contributes its cyclic factors; residues n are mapped to the logs of n mod p^e.
    """
    q = check_modulus(q)
    residues = np.arange(q)
    orders = []
    columns = []
    for p, e in sorted(factorint(q).items()):
        for order, table in _prime_power_factors(p, e):
            orders.append(order)
            columns.append(table[residues % (p**e)])
    logs = np.stack(columns, axis=1) if columns else np.zeros((q, 0), dtype=np.int64)
    exponent = math.lcm(*orders) if orders else 1
    group = CharacterGroup(
        q=q,
        orders=tuple(orders),
        logs=logs,
        coprime=coprime_mask(q, residues),
        exponent=exponent,
        phi=phi(q),
    )
    if math.prod(orders) != group.phi:
        raise InvariantViolation(f'factor orders {orders} do not multiply to phi({q}) = {group.phi}')
    logger.debug(f'Character group mod {q}: factor orders {orders}, exponent {exponent}')
    return group


def character_matrix(group: CharacterGroup) -> np.ndarray:
    """phi(q) x q matrix of character values, rows in index order"""
    return np.array([group.values(index) for index in group.indices()])


def quadratic_character(group: CharacterGroup) -> CharacterIndex:
    """Index of the Legendre symbol for an odd prime modulus"""
    if len(group.orders) != 1 or group.orders[0] != group.q - 1 or group.q % 2 == 0:
        raise InvalidParameterError(f'quadratic_character needs an odd prime modulus, got {group.q}')
    return (group.orders[0] // 2,)


def nontrivial_index(group: CharacterGroup) -> CharacterIndex:
    """First non-trivial index with every component set to 1 where the factor allows it"""
    index = tuple(1 if order > 1 else 0 for order in group.orders)
    if group.is_trivial(index):
        raise InvalidParameterError(f'the group mod {group.q} has no non-trivial character')
    return index


def orthogonality_errors(group: CharacterGroup) -> tuple[float, float]:
    """
    Max deviation of both orthogonality relations.

    Sum over characters of chi(m) conj(chi(n)) is phi(q) [m = n, coprime] and sum over n of chi(n) conj(psi(n))
    is phi(q) [chi = psi].
    """
    matrix = character_matrix(group)
    by_residue = matrix.T @ matrix.conj()
    expected_residue = np.diag(group.coprime.astype(float)) * group.phi
    by_character = matrix @ matrix.conj().T
    expected_character = np.eye(len(matrix)) * group.phi
    return (
        float(np.max(np.abs(by_residue - expected_residue))),
        float(np.max(np.abs(by_character - expected_character))),
    )
