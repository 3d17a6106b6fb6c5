"""
Tests for WorkbenchConfig
"""

import pytest
from pydantic import ValidationError

from btlab.config import WorkbenchConfig, load_config


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in ('BTLAB_THREADS', 'BTLAB_SEED', 'BTLAB_PAIR_DEPTH', 'BTLAB_SIEVE_STEP', 'BTLAB_LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)


class TestWorkbenchConfig:
    """Tests for configuration loading"""

    def test_defaults(self):
        config = load_config()
        assert config.threads == 4
        assert config.pair_depth == 16
        assert config.sieve_step == 0.001
        assert config.log_level == 'INFO'

    def test_environment_override(self, monkeypatch):
        """Test BTLAB_* variables override the defaults"""
        monkeypatch.setenv('BTLAB_THREADS', '8')
        monkeypatch.setenv('btlab_seed', '7')
        config = load_config()
        assert config.threads == 8
        assert config.seed == 7

    def test_env_file(self, tmp_path):
        (tmp_path / '.env').write_text('BTLAB_PAIR_DEPTH=10\nUNRELATED=1\n')
        assert WorkbenchConfig().pair_depth == 10

    @pytest.mark.parametrize('name,value', [
        ('BTLAB_THREADS', '0'),
        ('BTLAB_SIEVE_STEP', '0.5'),
        ('BTLAB_PAIR_DEPTH', 'deep'),
    ])
    def test_invalid_values(self, monkeypatch, name, value):
        monkeypatch.setenv(name, value)
        with pytest.raises(ValidationError):
            load_config()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
