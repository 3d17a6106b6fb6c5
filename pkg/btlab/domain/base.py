from abc import ABC, abstractmethod

import numpy as np

from btlab.models import ExperimentReport


class IExperiment(ABC):
    name: str

    @abstractmethod
    def run(self, rng: np.random.Generator) -> ExperimentReport:
        raise NotImplementedError

    def __call__(self, rng: np.random.Generator) -> ExperimentReport:
        return self.run(rng)
