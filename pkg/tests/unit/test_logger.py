"""
Unit tests for logging setup
"""
import json
import logging

import numpy as np
import pytest
import structlog

from app.core.logger import _plain_values, bind_run_context, get_logger, setup_logging

pytestmark = pytest.mark.unit


class TestPlainValues:
    """Test numpy values in log records"""

    def test_scalars_and_arrays(self):
        event = _plain_values(None, "info", {"n": np.int64(3), "flag": np.bool_(True), "v": np.arange(3)})
        assert event == {"n": 3, "flag": True, "v": [0, 1, 2]}
        assert type(event["n"]) is int

    def test_large_arrays_untouched(self):
        big = np.zeros(100)
        assert _plain_values(None, "info", {"v": big})["v"] is big


class TestSetupLogging:
    """Test the stderr JSON stream"""

    def test_json_records_carry_run_context(self, capsys):
        setup_logging(level="INFO", format_type="json")
        bind_run_context(command="classify", seed=5)
        get_logger("tests").info("label assigned", rho_P=np.float64(0.25))
        captured = capsys.readouterr()
        assert captured.out == ""
        record = json.loads(captured.err.strip().splitlines()[-1])
        assert record["event"] == "label assigned"
        assert record["command"] == "classify"
        assert record["seed"] == 5
        assert record["rho_P"] == 0.25
        structlog.contextvars.clear_contextvars()

    def test_unknown_level_falls_back(self):
        setup_logging(level="chatty")
        assert logging.getLogger().level == logging.WARNING
