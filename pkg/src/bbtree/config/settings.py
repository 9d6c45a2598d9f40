"""Application configuration using Pydantic Settings."""

import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Skip loading .env during pytest runs to keep tests independent of local overrides.
ENV_FILE = None if "PYTEST_CURRENT_TEST" in os.environ else ".env"


class Settings(BaseSettings):
    """Runtime configuration from environment variables."""

    # Application
    app_name: str = Field(default="bbtree", alias="BBT_APP_NAME")
    app_version: str = Field(default="0.1.0", alias="BBT_APP_VERSION")
    dev_mode: bool = Field(default=False, alias="BBT_DEV_MODE")
    log_level: str = Field(default="WARNING", alias="BBT_LOG_LEVEL")

    # Exact search limits
    exact_node_budget: int = Field(default=5_000_000, alias="BBT_EXACT_NODE_BUDGET")
    tree_cap: int = Field(default=1_000_000, alias="BBT_TREE_CAP")
    oracle_max_vertices: int = Field(default=12, alias="BBT_ORACLE_MAX_VERTICES")

    # Acceptance harness
    oracle_cross_check_max_n: int = Field(default=5, alias="BBT_ORACLE_CROSS_CHECK_MAX_N")

    model_config = SettingsConfigDict(
        env_file=ENV_FILE,
        env_file_encoding="utf-8",
        case_sensitive=False,
        populate_by_name=True,
        extra="ignore",
        env_prefix="",
    )

    def budget_or_none(self) -> int | None:
        """Return the exact-search node budget, or None when unbounded (budget <= 0)."""
        if self.exact_node_budget <= 0:
            return None
        return self.exact_node_budget

    @classmethod
    def settings_customise_sources(
        cls, settings_cls, init_settings, env_settings, dotenv_settings, file_secret_settings
    ):
        """Use only init and defaults during tests; otherwise include env and dotenv."""
        if "PYTEST_CURRENT_TEST" in os.environ:
            return (init_settings,)
        return (init_settings, env_settings, dotenv_settings, file_secret_settings)


def get_settings() -> Settings:
    """Get application settings."""
    settings = Settings()  # type: ignore
    return settings
