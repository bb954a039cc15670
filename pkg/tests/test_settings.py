# -*- coding: utf-8 -*-
from pathlib import Path

import pytest
from pydantic import ValidationError

from influnet.settings import InfluNetSettings, InfluNetSettingsLoader


class Test_InfluNetSettings:
    @staticmethod
    def test_required_attributes():
        settings = InfluNetSettings()
        for name in ("OUTPUT_DIR", "FD_STEP", "NORM_TOLERANCE", "MAX_RESAMPLES", "CSV_FLOAT_FORMAT"):
            assert name in settings.dict()

    @staticmethod
    def test_defaults():
        settings = InfluNetSettings()
        assert settings.OUTPUT_DIR == "."
        assert settings.FD_STEP == 1e-5
        assert settings.MAX_RESAMPLES == 1000
        assert settings.CSV_FLOAT_FORMAT == ".17g"

    @staticmethod
    def test_forbid_extra_attributes():
        with pytest.raises(ValidationError):
            InfluNetSettings(EXTRA_ATTRIBUTES_ARE_FORBIDDEN=True)

    @staticmethod
    def test_attributes_from_env(monkeypatch):
        """
        Test environment variables override defaults
        """
        monkeypatch.setenv("INFLUNET_OUTPUT_DIR", "/tmp/influnet", prepend=False)
        monkeypatch.setenv("INFLUNET_FD_STEP", "1e-4", prepend=False)
        monkeypatch.setenv("INFLUNET_MAX_RESAMPLES", "10", prepend=False)

        settings = InfluNetSettings()
        assert settings.dict()["OUTPUT_DIR"] == "/tmp/influnet"
        assert settings.dict()["FD_STEP"] == 1e-4
        assert settings.dict()["MAX_RESAMPLES"] == 10


class Test_InfluNetSettingsLoader_methods:
    @staticmethod
    def test_detect_config_file__noConfigFile(mocker):
        mP_is_file = mocker.patch.object(
            Path, "is_file", return_value=False
        )  # No config file exists at all
        mocker.patch.object(Path, "home", return_value=Path("/nonexistent"))

        assert InfluNetSettingsLoader._detect_config_file() is None

        # Path.is_file() called twice, CWD then HOME
        assert mP_is_file.call_count == 2

    @staticmethod
    def test_detect_config_file__exists(mocker):
        mP_is_file = mocker.patch.object(
            Path, "is_file", return_value=True
        )  # config file found on first try

        _cfgfile = InfluNetSettingsLoader._detect_config_file()
        assert isinstance(_cfgfile, str)
        assert _cfgfile.endswith("influnet.settings.json")
        assert mP_is_file.call_count == 1


class Test_InfluNetSettingsLoader:
    @staticmethod
    def test_no_config_file(mocker):
        mocker.patch.object(
            InfluNetSettingsLoader, "_detect_config_file", return_value=None
        )

        ISL = InfluNetSettingsLoader()

        assert isinstance(ISL(), InfluNetSettings)

    @staticmethod
    def test_config_file_exists(mocker):
        mocker.patch.object(
            InfluNetSettingsLoader,
            "_detect_config_file",
            return_value="path/to/config.file",
        )
        mocked_deserialize = mocker.patch(
            "influnet.settings.deserialize",
            return_value=({"OUTPUT_DIR": "from-file", "FD_STEP": 1e-3}, ""),
        )

        settings = InfluNetSettingsLoader()()

        mocked_deserialize.assert_called_once_with("path/to/config.file")
        assert settings.OUTPUT_DIR == "from-file"
        assert settings.FD_STEP == 1e-3

    @staticmethod
    def test_env_overrides_config_file(mocker, monkeypatch):
        monkeypatch.setenv("INFLUNET_OUTPUT_DIR", "from-env", prepend=False)
        mocker.patch.object(
            InfluNetSettingsLoader,
            "_detect_config_file",
            return_value="path/to/config.file",
        )
        mocker.patch(
            "influnet.settings.deserialize",
            return_value=({"OUTPUT_DIR": "from-file"}, ""),
        )

        settings = InfluNetSettingsLoader()()

        assert settings.OUTPUT_DIR == "from-env"
