"""The module containing the `config`.

The `config` module contains the numerical settings object, enabling the users
to globally tune grid sizes, truncation rules and verification tolerances.

Attributes:
    config (Config): The settings instance.

Classes:
    Config: The settings class.

"""

from .configuration import config, Config


__all__ = ["config", "Config"]
