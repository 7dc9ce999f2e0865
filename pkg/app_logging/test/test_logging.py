import structlog

from app_logging import run_context, setup_logging
from app_logging.config import LOG_FILE_NAME


def test_console_only_by_default():
    config = setup_logging(level="info")
    assert list(config["handlers"]) == ["console"]
    assert config["handlers"]["console"]["level"] == "INFO"
    assert config["root"]["level"] == "INFO"


def test_file_handler_is_opt_in(tmp_path):
    config = setup_logging(log_dir=tmp_path / "logs", to_file=True)
    file_handler = config["handlers"]["file"]
    assert file_handler["filename"] == str(tmp_path / "logs" / LOG_FILE_NAME)
    assert file_handler["formatter"] == "json"
    assert config["root"]["level"] == "DEBUG"
    assert (tmp_path / "logs").is_dir()


def test_run_context_binds_and_clears():
    with run_context("sweep", trials=10) as run_id:
        bound = structlog.contextvars.get_contextvars()
        assert bound["run_id"] == run_id
        assert bound["command"] == "sweep"
        assert bound["trials"] == 10
    assert structlog.contextvars.get_contextvars() == {}
