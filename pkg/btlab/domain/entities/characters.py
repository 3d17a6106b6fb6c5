import itertools
from collections.abc import Iterator

import numpy as np
from attr import dataclass

from btlab.domain.errors import InvalidParameterError

CharacterIndex = tuple[int, ...]


@dataclass(slots=True, frozen=True, eq=False)
class CharacterGroup:
    """
    Dirichlet characters mod q in index form.

    The unit group is split into cyclic factors of the given orders; `logs[n]` holds the discrete logarithms of n
    in each factor (-1 when gcd(n, q) > 1). A character is a tuple of exponents k_i and takes the value
    exp(2*pi*i * sum(k_i * log_i(n) / order_i)), kept as an integer phase modulo `exponent` until the end.
    """
    q: int
    orders: tuple[int, ...]
    logs: np.ndarray
    coprime: np.ndarray
    exponent: int
    phi: int

    def indices(self) -> Iterator[CharacterIndex]:
        return itertools.product(*(range(order) for order in self.orders))

    def __len__(self) -> int:
        return self.phi

    def is_trivial(self, index: CharacterIndex) -> bool:
        return all(k % order == 0 for k, order in zip(index, self.orders))

    def _check(self, index: CharacterIndex) -> CharacterIndex:
        if len(index) != len(self.orders):
            raise InvalidParameterError(
                f'character index needs {len(self.orders)} components mod {self.q}, got {index}'
            )
        return tuple(k % order for k, order in zip(index, self.orders))

    def phases(self, index: CharacterIndex) -> np.ndarray:
        """Integer phases mod `exponent` for n = 0..q-1; -1 marks non-coprime residues"""
        index = self._check(index)
        weights = np.array([k * (self.exponent // order) for k, order in zip(index, self.orders)], dtype=np.int64)
        phases = (self.logs @ weights) % self.exponent if len(weights) else np.zeros(self.q, dtype=np.int64)
        return np.where(self.coprime, phases, -1)

    def values(self, index: CharacterIndex) -> np.ndarray:
        phases = self.phases(index)
        roots = np.exp(2j * np.pi * np.arange(self.exponent) / self.exponent)
        return np.where(phases >= 0, roots[np.maximum(phases, 0)], 0)

    def order_of(self, index: CharacterIndex) -> int:
        index = self._check(index)
        return int(np.lcm.reduce([order // np.gcd(k, order) for k, order in zip(index, self.orders)] or [1]))

    def evaluate(self, index: CharacterIndex, n: np.ndarray | int) -> np.ndarray:
        return self.values(index)[np.mod(n, self.q)]
