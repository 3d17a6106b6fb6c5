"""
Tests for ExperimentOrchestrator
"""

import numpy as np
import pytest
from unittest.mock import patch

from btlab.domain.base import IExperiment
from btlab.domain.errors import InvalidParameterError, InvariantViolation
from btlab.models import ExperimentReport
from btlab.orchestrator import ExperimentOrchestrator
from btlab.services.experiments import (
    CharacterExperiment,
    CrtExperiment,
    PRIME_EXPERIMENTS,
    SUM_EXPERIMENTS,
    default_experiments,
)


class DrawExperiment(IExperiment):
    """Reports the first draw of its generator"""

    def __init__(self, name: str, status: str = 'passed'):
        self.name = name
        self.status = status

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        return ExperimentReport(name=self.name, status=self.status, values={'draw': float(rng.random())})


class RaisingExperiment(IExperiment):
    def __init__(self, name: str, error: Exception):
        self.name = name
        self.error = error

    def run(self, rng: np.random.Generator) -> ExperimentReport:
        raise self.error


@pytest.fixture
def orchestrator():
    """Three drawing experiments under seed 42"""
    return ExperimentOrchestrator([DrawExperiment('a'), DrawExperiment('b'), DrawExperiment('c', 'report')], seed=42)


class TestExperimentOrchestrator:
    """Tests for ExperimentOrchestrator"""

    def test_init(self, orchestrator):
        """Test registry order is kept"""
        assert orchestrator.names == ['a', 'b', 'c']
        assert orchestrator.seed == 42

    def test_same_seed_same_reports(self, orchestrator):
        """Test reruns under one seed reproduce every value"""
        again = ExperimentOrchestrator([DrawExperiment('a'), DrawExperiment('b'), DrawExperiment('c')], seed=42)
        first = [report.values for report in orchestrator.run()]
        second = [report.values for report in again.run()]
        assert first == second

    def test_generators_independent_of_selection(self, orchestrator):
        """Test an experiment draws the same values alone or in the full run"""
        alone = orchestrator.run(['b'])[0]
        full = {report.name: report for report in orchestrator.run()}
        assert alone.values == full['b'].values
        assert full['a'].values != full['b'].values

    def test_seed_changes_draws(self, orchestrator):
        other = ExperimentOrchestrator([DrawExperiment('a')], seed=43)
        assert other.run_one('a').values != orchestrator.run_one('a').values

    def test_unknown_experiment(self, orchestrator):
        """Test an unknown name is a parameter error"""
        with pytest.raises(InvalidParameterError):
            orchestrator.run_one('missing')

    def test_invariant_violation_becomes_failed_report(self):
        """Test a raised invariant violation is reported, not propagated"""
        orchestrator = ExperimentOrchestrator([RaisingExperiment('bad', InvariantViolation('bound exceeded'))], seed=0)
        report = orchestrator.run_one('bad')
        assert report.status == 'failed'
        assert report.error == 'invariant violation: bound exceeded'

    def test_unexpected_error_becomes_failed_report(self):
        orchestrator = ExperimentOrchestrator([RaisingExperiment('bad', ValueError('boom'))], seed=0)
        report = orchestrator.run_one('bad')
        assert report.status == 'failed'
        assert report.error == 'boom'

    def test_run_calls_experiment_once(self, orchestrator, mocker):
        spy = mocker.spy(orchestrator.experiments['a'], 'run')
        orchestrator.run(['a'])
        spy.assert_called_once()

    def test_failure_is_logged(self, orchestrator):
        """Test a failed experiment logs a warning"""
        failing = ExperimentOrchestrator([DrawExperiment('a', 'failed')], seed=0)
        with patch('btlab.orchestrator.logger') as mock_logger:
            failing.run_one('a')
            mock_logger.warning.assert_called_once()

    @pytest.mark.parametrize('statuses,expected', [
        (['passed', 'passed'], 'passed'),
        (['passed', 'report'], 'passed'),
        (['report', 'report'], 'report'),
        (['passed', 'failed', 'report'], 'failed'),
        ([], 'passed'),
    ])
    def test_overall_status(self, statuses, expected):
        reports = [ExperimentReport(name=str(i), status=status) for i, status in enumerate(statuses)]
        assert ExperimentOrchestrator.overall_status(reports) == expected


class TestRegistry:
    """Tests for the default experiment registry"""

    def test_registry_order(self):
        names = [experiment.name for experiment in default_experiments()]
        assert names == [*SUM_EXPERIMENTS, *PRIME_EXPERIMENTS]

    def test_overrides_keep_positions(self):
        custom = CrtExperiment(cases=3)
        registry = default_experiments(overrides={'crt': custom})
        assert registry[SUM_EXPERIMENTS.index('crt')] is custom

    def test_small_experiments_pass(self):
        """Test real experiments run end to end under the orchestrator"""
        orchestrator = ExperimentOrchestrator([CrtExperiment(cases=5), CharacterExperiment(q_max=12)], seed=1)
        reports = orchestrator.run()
        assert [report.status for report in reports] == ['passed', 'passed']
        assert ExperimentOrchestrator.overall_status(reports) == 'passed'


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
