"""
Experiment Orchestrator - runs registered experiments with reproducible generators
"""

import logging
import time
from collections.abc import Iterable

import numpy as np

from btlab.domain.base import IExperiment
from btlab.domain.errors import InvalidParameterError, InvariantViolation
from btlab.models import ExperimentReport, Status

logger = logging.getLogger(__name__)


class ExperimentOrchestrator:
    """
    Runs experiments by name and collects their reports:
    1. Derives a generator from (seed, registry position) for each experiment
    2. Runs the experiment, turning a raised error into a failed report
    3. Rolls the statuses up into one command status
    """

    def __init__(self, experiments: Iterable[IExperiment], seed: int):
        """
        Args:
            experiments: registry in a fixed order; the order fixes each experiment's generator
            seed: base seed for every generator
        """
        self.experiments = {experiment.name: experiment for experiment in experiments}
        self._positions = {name: position for position, name in enumerate(self.experiments)}
        self.seed = seed

    @property
    def names(self) -> list[str]:
        return list(self.experiments)

    def generator_for(self, name: str) -> np.random.Generator:
        return np.random.default_rng([self.seed, self._positions[name]])

    def run_one(self, name: str) -> ExperimentReport:
        if name not in self.experiments:
            raise InvalidParameterError(f'unknown experiment {name!r}; known: {", ".join(self.experiments)}')
        experiment = self.experiments[name]
        logger.info(f'Running experiment {name}')
        started = time.perf_counter()
        try:
            report = experiment(self.generator_for(name))
        except InvariantViolation as e:
            logger.error(f'Experiment {name} violated an invariant: {e}')
            report = ExperimentReport(name=name, status='failed', error=f'invariant violation: {e}')
        except Exception as e:
            logger.error(f'Experiment {name} error: {str(e)}')
            report = ExperimentReport(name=name, status='failed', error=str(e))
        elapsed = time.perf_counter() - started

        if report.status == 'failed':
            logger.warning(f'Experiment {name} failed after {elapsed:.2f}s')
        else:
            logger.info(f'Experiment {name} {report.status} in {elapsed:.2f}s')
        return report

    def run(self, names: Iterable[str] | None = None) -> list[ExperimentReport]:
        selected = list(names) if names is not None else self.names
        return [self.run_one(name) for name in selected]

    @staticmethod
    def overall_status(reports: list[ExperimentReport]) -> Status:
        if any(report.status == 'failed' for report in reports):
            return 'failed'
        if reports and all(report.status == 'report' for report in reports):
            return 'report'
        return 'passed'
