import logging
import os

from config import load_worker_count, setup_logging


def test_worker_count_from_environment(monkeypatch):
    monkeypatch.setenv("WALKSPEC_WORKERS", "3")
    assert load_worker_count() == 3


def test_bad_worker_count_falls_back(monkeypatch):
    default = os.cpu_count() or 1
    for raw in ("zero", "0", "-2", ""):
        monkeypatch.setenv("WALKSPEC_WORKERS", raw)
        assert load_worker_count() == default


def test_logging_levels(monkeypatch):
    monkeypatch.delenv("WALKSPEC_LOG_LEVEL", raising=False)
    assert setup_logging(-1) == logging.ERROR
    assert setup_logging(0) == logging.WARNING
    assert setup_logging(1) == logging.INFO
    assert setup_logging(3) == logging.DEBUG
    monkeypatch.setenv("WALKSPEC_LOG_LEVEL", "info")
    assert setup_logging(0) == logging.INFO
    monkeypatch.setenv("WALKSPEC_LOG_LEVEL", "loud")
    assert setup_logging(0) == logging.WARNING
