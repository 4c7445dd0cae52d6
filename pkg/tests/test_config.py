"""Tests for environment-driven settings."""

import importlib

import pytest

from config import Settings

cli_main = importlib.import_module("cli.main")


def test_defaults(monkeypatch):
    for name in ("BINREC_CAP", "BINREC_PATH_CAP", "BINREC_SEED", "BINREC_LOG_LEVEL",
                 "BINREC_NORM_FLOOR", "BINREC_ISO_DIM"):
        monkeypatch.delenv(name, raising=False)
    loaded = Settings.from_env()
    assert loaded.enumeration_cap == 12
    assert loaded.path_cap == 14
    assert loaded.log_level == "WARNING"
    assert loaded.validate() == []


def test_cap_also_bounds_path_cap(monkeypatch):
    monkeypatch.setenv("BINREC_CAP", "9")
    monkeypatch.delenv("BINREC_PATH_CAP", raising=False)
    loaded = Settings.from_env()
    assert loaded.enumeration_cap == 9
    assert loaded.path_cap == 9


def test_log_level_is_upper_cased(monkeypatch):
    monkeypatch.setenv("BINREC_LOG_LEVEL", "debug")
    assert Settings.from_env().log_level == "DEBUG"


def test_validate_reports_every_problem():
    errors = Settings(enumeration_cap=1, norm_ratio_floor=1.5, log_level="LOUD").validate()
    assert len(errors) == 3
    assert any("BINREC_CAP" in e for e in errors)
    assert any("BINREC_NORM_FLOOR" in e for e in errors)
    assert any("LOUD" in e for e in errors)


def test_malformed_number_keeps_default_and_is_reported(monkeypatch):
    monkeypatch.setenv("BINREC_CAP", "twelve")
    monkeypatch.setenv("BINREC_NORM_FLOOR", "0.2")
    monkeypatch.delenv("BINREC_PATH_CAP", raising=False)
    loaded = Settings.from_env()
    assert loaded.enumeration_cap == 12
    assert loaded.path_cap == 14
    assert loaded.norm_ratio_floor == 0.2
    assert loaded.validate() == ["BINREC_CAP must be a number, got 'twelve'"]


def test_cli_rejects_malformed_environment(monkeypatch, capsys):
    monkeypatch.setenv("BINREC_SEED", "1e3")
    monkeypatch.setattr(cli_main, "settings", Settings.from_env())
    with pytest.raises(SystemExit) as exit_info:
        cli_main.main(["compute", "--x", "1", "--n", "3"])
    assert exit_info.value.code == 2
    assert "BINREC_SEED" in capsys.readouterr().err
