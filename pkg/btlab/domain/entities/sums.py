import numpy as np
from attr import dataclass


@dataclass(slots=True, frozen=True, eq=False)
class KloostermanTable:
    """Normalized Kloosterman sums Kl(x, p) = S(x, 1; p) / sqrt(p) for x = 0..p-1"""
    p: int
    values: np.ndarray

    def __getitem__(self, x: int) -> float:
        return float(self.values[x % self.p])

    def at(self, residues: np.ndarray) -> np.ndarray:
        return self.values[np.mod(residues, self.p)]


@dataclass(slots=True, frozen=True, eq=False)
class CongruenceCount:
    q: int
    M: int
    N: int
    alpha: np.ndarray
    beta: np.ndarray
    R_exact: float
    main_term: float

    @property
    def error(self) -> float:
        return self.R_exact - self.main_term

    @property
    def relative_error(self) -> float:
        return abs(self.error) / self.main_term if self.main_term else float('inf')
