"""Tests for configuration."""

from src.bbtree.config.settings import Settings


def test_settings_default_values():
    """Test default settings values."""
    settings = Settings()
    assert settings.app_name == "bbtree"
    assert settings.log_level == "WARNING"
    assert settings.dev_mode is False
    assert settings.tree_cap == 1_000_000
    assert settings.oracle_max_vertices == 12
    assert settings.oracle_cross_check_max_n == 5


def test_settings_dev_mode():
    """Test dev mode settings."""
    settings = Settings(dev_mode=True)
    assert settings.dev_mode is True


def test_settings_alias_names():
    """Test settings can be set by their environment alias."""
    settings = Settings(BBT_TREE_CAP=50, BBT_LOG_LEVEL="DEBUG")
    assert settings.tree_cap == 50
    assert settings.log_level == "DEBUG"


def test_budget_or_none():
    """Test a non-positive node budget means unbounded search."""
    assert Settings().budget_or_none() == 5_000_000
    assert Settings(exact_node_budget=0).budget_or_none() is None
    assert Settings(exact_node_budget=-1).budget_or_none() is None
