import json
import logging

import pytest
from pydantic import ValidationError

from core.config import Settings
from core.engine import EarleyEngine, EngineFactory, EngineName, LateEngine, ParallelLateEngine
from modules.parallel import ParallelConfig
from utils.logger import JsonFormatter, setup_logging


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("LATECHART_WORKERS", "LATECHART_QUEUE_POLICY", "LATECHART_BATCH_SIZE"):
            monkeypatch.delenv(name, raising=False)
        s = Settings()
        assert (s.workers, s.queue_policy, s.batch_size, s.replication_cap) == (None, "fifo", 1, 1_000_000)
        assert s.bench_warmup_runs == 3

    def test_env_prefix(self, monkeypatch):
        monkeypatch.setenv("LATECHART_WORKERS", "6")
        monkeypatch.setenv("LATECHART_QUEUE_POLICY", "random")
        s = Settings()
        assert (s.workers, s.queue_policy) == (6, "random")

    @pytest.mark.parametrize("override, requested, expected", [(None, None, 1), (None, 4, 4), (2, 4, 2), (3, None, 3)])
    def test_worker_precedence(self, override, requested, expected):
        assert Settings(workers=override).resolve_workers(requested) == expected

    def test_invalid_values(self):
        with pytest.raises(ValidationError):
            Settings(workers=0)
        with pytest.raises(ValidationError):
            Settings(queue_policy="stack")


class TestEngineFactory:
    @pytest.mark.parametrize(
        "name, cls",
        [("earley", EarleyEngine), ("late", LateEngine), ("late-serial", LateEngine), ("LATE-PARALLEL", ParallelLateEngine)],
    )
    def test_aliases(self, name, cls):
        assert type(EngineFactory.get_engine(name)) is cls

    def test_unknown(self):
        with pytest.raises(ValueError):
            EngineFactory.resolve("cyk")

    def test_processors(self):
        assert EngineFactory.get_engine(EngineName.LATE_SERIAL).processors == 1
        parallel = EngineFactory.get_engine(EngineName.LATE_PARALLEL, ParallelConfig(workers=1))
        assert parallel.processors == 1


class TestJsonFormatter:
    def record(self, **extra):
        record = logging.LogRecord("latechart.test", logging.INFO, __file__, 1, "Grammar loaded", (), None)
        record.__dict__.update(extra)
        return record

    def test_core_fields(self):
        payload = json.loads(JsonFormatter().format(self.record()))
        assert payload["message"] == "Grammar loaded"
        assert payload["level"] == "INFO"
        assert payload["name"] == "latechart.test"
        assert "timestamp" in payload

    def test_extra_fields(self):
        payload = json.loads(JsonFormatter().format(self.record(rules=14, path="arith.g")))
        assert (payload["rules"], payload["path"]) == (14, "arith.g")
        assert "args" not in payload and "msecs" not in payload

    def test_fmt_keys(self):
        payload = json.loads(JsonFormatter({"logger": "name", "line": "lineno"}).format(self.record()))
        assert (payload["logger"], payload["line"]) == ("latechart.test", 1)
        assert "name" not in payload


def test_setup_logging_writes_json_to_stderr(capsys):
    logger = setup_logging("INFO")
    try:
        logging.getLogger("latechart.test").info("Cell finished", extra={"workers": 4})
        err = capsys.readouterr().err.strip().splitlines()[-1]
        assert json.loads(err)["workers"] == 4
        assert logger.level == logging.INFO
    finally:
        setup_logging(logging.WARNING)


def test_setup_logging_default_keys_locate_the_call(capsys):
    setup_logging("INFO")
    try:
        logging.getLogger("latechart.test").info("Located")
        payload = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert payload["logger"] == "latechart.test"
        assert payload["module"] == "test_config_logging"
        assert isinstance(payload["line"], int)
        assert (payload["level"], payload["message"]) == ("INFO", "Located")
    finally:
        setup_logging(logging.WARNING)


def test_setup_logging_custom_keys(capsys):
    setup_logging("INFO", fmt_keys={"msg": "message"})
    try:
        logging.getLogger("latechart.test").info("Custom")
        payload = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert payload["msg"] == "Custom"
        assert "line" not in payload
    finally:
        setup_logging(logging.WARNING)
