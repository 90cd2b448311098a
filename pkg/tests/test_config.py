from dataclasses import FrozenInstanceError

import pytest

from critical_popular_matching.config import Config
from critical_popular_matching.exceptions import ConfigError


def test_defaults():
    config = Config()
    assert config.oracle_edge_cap == 24
    assert config.log_level == "WARNING"


def test_from_env():
    config = Config.from_env({"CPM_ORACLE_EDGE_CAP": "30", "CPM_DEFAULT_DENSITY": "0.25", "OTHER": "x"})
    assert config.oracle_edge_cap == 30
    assert config.default_density == 0.25
    assert config.verify_count == Config().verify_count


def test_from_env_rejects_bad_values():
    with pytest.raises(ConfigError, match="CPM_VERIFY_COUNT"):
        Config.from_env({"CPM_VERIFY_COUNT": "many"})
    with pytest.raises(ValueError):
        Config.from_env({"CPM_DEFAULT_DENSITY": "dense"})


def test_from_env_reads_os_environ(monkeypatch):
    monkeypatch.setenv("CPM_GENERATOR_RETRIES", "5")
    assert Config.from_env().generator_retries == 5


def test_with_overrides_ignores_none():
    config = Config().with_overrides(oracle_edge_cap=None, verify_count=3)
    assert config == Config(verify_count=3)


def test_config_is_frozen():
    with pytest.raises(FrozenInstanceError):
        Config().verify_count = 1
