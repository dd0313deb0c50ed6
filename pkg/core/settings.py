"""Engine settings and configuration management.

This module provides centralized configuration for the ConfTC engine:
thresholds, search budgets and the default collapse policy, persisted as
JSON so that runs can be repeated with identical parameters.

Classes:
    EngineSettings: Main configuration class for all engine parameters

Example:
    >>> from core.settings import EngineSettings
    >>> settings = EngineSettings()
    >>> settings.search_budget = 500000
    >>> settings.save_to_file(Path("settings.json"))
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict

logger = logging.getLogger(__name__)


@dataclass
class EngineSettings:
    """Engine configuration settings.

    Attributes:
        snf_threshold (int): Cells per dimension above which homology is
            computed on the collapsed complex. Default is 20000.
        search_budget (int): Tensor multiplications allowed per
            zero-divisor search. Default is 100000.
        max_candidates (int): Cap on zero-divisor candidates. Default is 2000.
        max_depth (int): Longest product the search tries. Default is 4.
        collapse_policy (str): Registered collapse policy. Default is "greedy".
        policy_seed (int): Seed for randomized policies. Default is 0.
        field (str): Coefficient field of the `ring` command. Default is "q".
        log_level (str): Logging level name for the CLI. Default is "WARNING".
    """

    # Homology
    snf_threshold: int = 20000

    # Zero-divisor search
    search_budget: int = 100000
    max_candidates: int = 2000
    max_depth: int = 4

    # Collapse
    collapse_policy: str = "greedy"
    policy_seed: int = 0

    # Output
    field: str = "q"
    log_level: str = "WARNING"

    def to_dict(self) -> Dict[str, Any]:
        """Convert settings to dictionary for serialization.

        Returns:
            Dict[str, Any]: Dictionary representation of all settings.
        """
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> EngineSettings:
        """Create EngineSettings from dictionary data.

        Args:
            data (Dict[str, Any]): Dictionary containing setting values.

        Returns:
            EngineSettings: New instance with values from data.

        Note:
            Missing keys in data will use default values; unknown keys are ignored.
        """
        known = {f.name for f in fields(cls)}
        return cls(**{key: value for key, value in data.items() if key in known})

    def save_to_file(self, file_path: Path) -> bool:
        """Save settings to JSON file.

        Args:
            file_path (Path): Path where settings file will be saved.

        Returns:
            bool: True if settings were saved successfully, False otherwise.
        """
        try:
            with open(file_path, 'w', encoding='utf-8') as f:
                json.dump(self.to_dict(), f, indent=2, sort_keys=True)
            return True
        except OSError:
            logger.warning("Could not write settings to %s", file_path)
            return False

    @classmethod
    def load_from_file(cls, file_path: Path) -> EngineSettings:
        """Load settings from JSON file.

        Args:
            file_path (Path): Path to settings file to load.

        Returns:
            EngineSettings: Settings instance with loaded values, or default
                settings if file doesn't exist or loading fails.
        """
        try:
            if file_path.exists():
                with open(file_path, 'r', encoding='utf-8') as f:
                    data = json.load(f)
                if isinstance(data, dict):
                    return cls.from_dict(data)
        except (OSError, ValueError, TypeError):
            logger.warning("Could not read settings from %s; using defaults", file_path)
        return cls()  # Return default settings if loading fails


# Global settings instance
DEFAULT_SETTINGS = EngineSettings()
