import importlib
import logging

import pytest
from pythonjsonlogger import jsonlogger

from src import config
from src.utils.decorators import log_timing
from src.utils.exceptions import ConfigError
from src.utils.logger import CustomLogger


@pytest.fixture
def reload_config(monkeypatch):
    """Reload the config module under a patched environment, restoring it afterwards."""
    def apply(**env):
        for name, value in env.items():
            monkeypatch.setenv(name, value)
        return importlib.reload(config)
    yield apply
    monkeypatch.undo()
    importlib.reload(config)


def test_defaults():
    assert config.ARITY_LIMIT >= 1
    assert config.SIMPLIFY_BUDGET >= 1
    assert config.LOG_FORMAT in config.LOG_FORMATS


def test_environment_overrides(reload_config):
    reloaded = reload_config(TERNARY_ARITY_LIMIT="5", TERNARY_LOG_LEVEL="debug", TERNARY_LOG_FORMAT="JSON")
    assert reloaded.ARITY_LIMIT == 5
    assert reloaded.LOG_LEVEL == "DEBUG"
    assert reloaded.LOG_FORMAT == "json"


@pytest.mark.parametrize("name, value", [
    ("TERNARY_ARITY_LIMIT", "many"),
    ("TERNARY_SIMPLIFY_BUDGET", "0"),
    ("TERNARY_RESYNTHESIS_MAX_VARS", "-2"),
    ("TERNARY_LOG_LEVEL", "LOUD"),
    ("TERNARY_LOG_FORMAT", "xml"),
])
def test_invalid_settings(reload_config, name, value):
    with pytest.raises(ConfigError) as exc_info:
        reload_config(**{name: value})
    assert name in str(exc_info.value)


def test_json_log_format(mocker):
    mocker.patch.object(config, "LOG_FORMAT", "json")
    mocker.patch.object(config, "LOG_DIR", None)
    logger = CustomLogger("JsonFormatTest")
    assert isinstance(logger.logger.handlers[0].formatter, jsonlogger.JsonFormatter)


def test_log_directory(mocker, tmp_path):
    mocker.patch.object(config, "LOG_DIR", str(tmp_path / "logs"))
    logger = CustomLogger("FileLogTest", level="INFO")
    logger.info("hello")
    for handler in logger.logger.handlers:
        handler.flush()
    assert "hello" in (tmp_path / "logs" / "FileLogTest.log").read_text()


def test_log_timing_only_measures_at_debug(mocker):
    logger = CustomLogger("TimingTest", level="DEBUG")
    debug = mocker.spy(logger, "debug")

    @log_timing(logger)
    def work(a, b):
        return a + b

    assert work(1, 2) == 3
    assert debug.call_count == 1
    assert "work took" in debug.call_args[0][0]

    quiet = CustomLogger("QuietTimingTest", level="WARNING")
    spy = mocker.spy(quiet, "debug")
    assert log_timing(quiet)(work)(2, 2) == 4
    assert spy.call_count == 0
    assert not quiet.logger.isEnabledFor(logging.DEBUG)
