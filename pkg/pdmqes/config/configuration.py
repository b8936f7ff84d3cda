import copy
import json
import warnings
from typing import Any

from ..typings import SolverAttrs
from .defaults import DEFAULT_CONFIG


class Config:
    """The class representing the numerical settings.

    Attributes:
        config (SolverAttrs): The settings.

    Methods:
        reset_config():
            Resets the global settings.
        update_config(config):
            Updates the global settings.
        get(attr, default):
            Gets the associated setting.

    """

    config: SolverAttrs

    def __init__(self):
        """Initializes the global settings."""

        self.config = copy.deepcopy(DEFAULT_CONFIG)

    def reset_config(self) -> None:
        """Resets the global settings.

        Examples:
            >>> from pdmqes.config import config
            >>> config.reset_config()
            >>> config.get("oracle_grid_points")
            4000

        """
        self.config = copy.deepcopy(DEFAULT_CONFIG)

    def update_config(self, config: SolverAttrs) -> None:
        """Updates the global settings.

        Unknown keys are skipped with a warning.

        Examples:
            >>> from pdmqes.config import config
            >>> config.update_config({"oracle_grid_points": 2000})
            >>> config.get("oracle_grid_points")
            2000

        Args:
            config: The settings to be updated.

        """
        for key, value in config.items():
            if key not in DEFAULT_CONFIG:
                warnings.warn(f"Warning: {key} is not a valid setting. Skipping...")
                continue
            self.config[key] = value

    def get(self, attr: str, default: Any = None) -> Any:
        """Gets the associated setting.

        Examples:
            >>> from pdmqes.config import config
            >>> config.get("energy_tolerance")
            1e-05

        Args:
            attr: The setting to retrieve.
            default: The value to return, if the setting is not present.

        Returns:
            The setting value if present. Otherwise, returns the `default` value.

        """
        return self.config.get(attr, default)

    def __getitem__(self, attr: str) -> Any:
        return self.config[attr]

    def __repr__(self):
        """Represents the settings as a json string."""
        return json.dumps(self.config, ensure_ascii=False, indent=4)


config: Config = Config()
"""The settings instance that the users should interact with."""
