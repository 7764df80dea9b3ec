"""
Unit tests for settings, logging setup and error messages
"""

import json
import logging

import pytest

from lifted_ctl.utils.config import Settings
from lifted_ctl.utils.error_messages import get_formula_error, get_model_error
from lifted_ctl.utils.errors import FormulaSyntaxError, ModelFormatError
from lifted_ctl.utils.logging_config import setup_logging

pytestmark = pytest.mark.unit


class TestSettings:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("LIFTED_CTL_REUSE", raising=False)
        settings = Settings()
        assert settings.reuse is True
        assert settings.max_random_states == 8
        assert settings.max_random_features == 5

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("LIFTED_CTL_REUSE", "false")
        monkeypatch.setenv("LIFTED_CTL_DOT_RANKDIR", "LR")
        settings = Settings()
        assert settings.reuse is False
        assert settings.dot_rankdir == "LR"


class TestLogging:
    def test_json_records_go_to_stderr(self, capsys):
        setup_logging("INFO", "json")
        logging.getLogger('lifted_ctl.verify').info("Engine call", extra={'call': 1})
        captured = capsys.readouterr()
        assert captured.out == ""
        record = json.loads(captured.err.strip().splitlines()[-1])
        assert record["message"] == "Engine call"
        assert record["call"] == 1
        assert record["service"] == "lifted_ctl"

    def test_text_format(self, capsys):
        setup_logging("WARNING", "text")
        logging.getLogger('lifted_ctl.models').warning("Projection is not total")
        assert "[lifted_ctl.models] [WARNING] Projection is not total" in capsys.readouterr().err

    def test_unknown_level(self):
        with pytest.raises(ValueError):
            setup_logging("LOUD")

    def test_file_handler(self, tmp_path):
        setup_logging("INFO", "json", tmp_path)
        logging.getLogger('lifted_ctl.bench').info("Bench row")
        for handler in logging.getLogger('lifted_ctl').handlers:
            handler.flush()
        assert any(p.name.startswith("lifted_ctl_") for p in tmp_path.iterdir())


class TestErrors:
    def test_formula_error_carries_position(self):
        error = FormulaSyntaxError("expected 'U' or 'V'", "A[p X q]", 5)
        assert error.position == 5
        assert "column 6" in str(error)

    def test_model_error_location(self):
        error = ModelFormatError("malformed transition", 4, "vm.fts")
        assert str(error).startswith("vm.fts:4:")

    def test_formula_banner_has_caret(self):
        banner = get_formula_error("A[p X q]", 5, "expected 'U' or 'V'")
        lines = banner.splitlines()
        text_line = next(i for i, line in enumerate(lines) if line.strip() == "A[p X q]")
        assert lines[text_line + 1].index("^") == lines[text_line].index("X")

    def test_model_banner_location(self):
        assert "Location: vm.fts:4" in get_model_error("vm.fts", "bad", 4)
