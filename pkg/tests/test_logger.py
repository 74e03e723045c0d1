"""Tests for logging setup"""

import logging

from src.utils.logger import ROOT_LOGGER_NAME, get_logger, setup_logger


def test_get_logger_is_child_of_package_logger():
    """Test module loggers sit below the package logger"""
    assert get_logger("src.roots").name == f"{ROOT_LOGGER_NAME}.src.roots"
    assert get_logger(ROOT_LOGGER_NAME).name == ROOT_LOGGER_NAME


def test_setup_logger_single_console_handler():
    """Test repeated setup keeps one console handler"""
    name = f"{ROOT_LOGGER_NAME}.test_console"
    setup_logger(name=name)
    logger = setup_logger(name=name, level="DEBUG")
    console = [h for h in logger.handlers if type(h) is logging.StreamHandler]
    assert len(console) == 1
    assert logger.level == logging.DEBUG


def test_setup_logger_file(tmp_path):
    """Test log records reach the optional log file"""
    path = tmp_path / "run.log"
    name = f"{ROOT_LOGGER_NAME}.test_file"
    logger = setup_logger(name=name, level="INFO", log_file=str(path))
    logger.info("zeta cutoff 4200")
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)
    assert "zeta cutoff 4200" in path.read_text(encoding="utf-8")
