"""
Configuration loader utility.
"""

import os
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

# (environment variable, dot-path, converter)
ENV_OVERRIDES = (
    ("DIRDIM_WORKERS", "search.workers", int),
    ("DIRDIM_MODE", "search.mode", str),
    ("DIRDIM_EDGE_BUDGET", "orientation_search.edge_budget", int),
    ("DIRDIM_MAX_SUBSETS", "verification.max_subsets", int),
    ("LOG_LEVEL", "logging.level", str),
    ("LOG_PATH", "logging.path", str),
)


class ConfigLoader:
    """
    Load and manage toolkit configuration from YAML and environment variables.
    """

    def __init__(self, config_path: str = "config.yaml", env_path: Optional[str] = ".env"):
        """
        Initialize configuration loader.

        Args:
            config_path: Path to YAML configuration file
            env_path: Path to .env file (optional)
        """
        self.config_path = config_path
        self.env_path = env_path
        self.config: Dict[str, Any] = {}

        self.load()

    def load(self):
        """Load configuration from files."""
        if self.env_path and os.path.exists(self.env_path):
            load_dotenv(self.env_path)

        if not os.path.exists(self.config_path):
            raise FileNotFoundError(f"Configuration file not found: {self.config_path}")

        with open(self.config_path, "r", encoding="utf-8") as f:
            self.config = yaml.safe_load(f) or {}

        self._override_from_env()

    def _override_from_env(self):
        """Override configuration with DIRDIM_* and LOG_* environment variables."""
        for var, key, convert in ENV_OVERRIDES:
            raw = os.getenv(var)
            if not raw:
                continue
            try:
                self.set(key, convert(raw))
            except ValueError as e:
                raise ValueError(f"{var}={raw!r} is not valid for {key}: {e}") from None

    def get(self, key: str = None, default: Any = None) -> Any:
        """
        Get configuration value.

        Args:
            key: Dot-separated key path (e.g., "search.workers")
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        if key is None:
            return self.config

        value = self.config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any):
        """
        Set configuration value.

        Args:
            key: Dot-separated key path
            value: Value to set
        """
        keys = key.split(".")
        config = self.config

        for k in keys[:-1]:
            if k not in config or not isinstance(config[k], dict):
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value
