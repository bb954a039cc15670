# -*- coding: utf-8 -*-
"""
InfluNet global configuration parameters.
"""

# pylint: disable=C0301 # Line too long
# pylint: disable=R0903 # Too few public methods

from pathlib import Path
from typing import Union

from pydantic import BaseSettings

from .utils import deserialize

__all__ = ["INFLUNETSETTINGS", "InfluNetSettings", "InfluNetSettingsLoader"]


class InfluNetSettings(BaseSettings):
    """InfluNet Settings class.

    Holds the default configuration for InfluNet.

    Reads from $CWD/influnet.settings.json if it exists, otherwise from `$HOME/.influnet/influnet.settings.json` if that exists.

    Any setting can be overwritten using environment variables. The ENV variable has a prefix of `INFLUNET_` + name of the setting.
    The environment variables take precedence over any setting in the configuration file.
    """

    # Default directory for trajectory CSVs and reports
    OUTPUT_DIR: str = "."
    # Central finite-difference step for partials of rate potentials
    FD_STEP: float = 1e-5
    # Relative tolerance on (dt/dtau)^2 - (dx/dtau)^2 = 1 before a diagnostic is logged
    NORM_TOLERANCE: float = 1e-9
    # Upper bound on collinearity rejection draws per reception
    MAX_RESAMPLES: int = 1000
    # float format for CSV output, .17g round-trips every double
    CSV_FLOAT_FORMAT: str = ".17g"

    class Config:
        """Configuration for InfluNetSettings BaseSettings class"""

        env_prefix = "INFLUNET_"
        case_sensitive = True
        extra = "forbid"  # forbid extra attributes not explicitly listed above


class InfluNetSettingsLoader:
    """
    The InfluNetSettingsLoader class is an utility class which will return a callable instance which in fact returns an instance of InfluNetSettings.
    It detects the optional configuration file; environment variables override values read from the file.
    """

    INFLUNET_CONFIGFILE_NAME = "influnet.settings.json"

    _settings: InfluNetSettings = None

    def __init__(self):
        config_file = self._detect_config_file()

        if config_file:
            _config, _ = deserialize(config_file)
            # values from the environment win over the file
            self._settings = InfluNetSettings(
                **{**_config, **InfluNetSettings().dict(exclude_unset=True)}
            )
        else:
            self._settings = InfluNetSettings()

    def __call__(self) -> InfluNetSettings:
        """
        Returns instance of InfluNetSettings.
        """
        return self._settings

    @classmethod
    def _detect_config_file(cls) -> Union[str, None]:
        """Detect if/where the InfluNet config file `(influnet.settings.json)` is located.

        First checks for existence of `influnet.settings.json` in the CWD and uses this file if found.
        Alternatively `Path.home()/.influnet/influnet.settings.json` is used if it exists.
        """
        _config_in_cwd = Path.cwd() / cls.INFLUNET_CONFIGFILE_NAME
        if _config_in_cwd.is_file():
            return str(_config_in_cwd)

        _configfile = Path.home() / ".influnet" / cls.INFLUNET_CONFIGFILE_NAME
        if _configfile.is_file():
            return str(_configfile)

        return None


ISL = InfluNetSettingsLoader()

INFLUNETSETTINGS = ISL()
