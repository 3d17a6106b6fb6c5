import numpy as np
from attr import dataclass

EULER_GAMMA = 0.5772156649015329


@dataclass(slots=True, frozen=True, eq=False)
class SieveTable:
    """Grid values of the linear-sieve functions F and f on 2 <= s <= s_max"""
    s_max: float
    step: float
    s_values: np.ndarray
    F_values: np.ndarray
    f_values: np.ndarray
    gamma: float = EULER_GAMMA

    def __len__(self) -> int:
        return len(self.s_values)
