import logging
import json
import sys
from typing import Any

# LogRecord attributes that are not user-supplied `extra=` fields
_RESERVED = frozenset(vars(logging.LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime"}

DEFAULT_FMT_KEYS = {
    "level": "levelname",
    "message": "message",
    "timestamp": "timestamp",
    "logger": "name",
    "module": "module",
    "line": "lineno",
    "thread": "threadName",
}


class JsonFormatter(logging.Formatter):
    """
    Formatter that outputs JSON strings after parsing the LogRecord.
    """

    def __init__(
        self,
        fmt_keys: dict[str, str] | None = None,
    ):
        super().__init__()
        self.fmt_keys = fmt_keys if fmt_keys is not None else {}

    def format(self, record: logging.LogRecord) -> str:
        message = self._prepare_log_dict(record)
        return json.dumps(message, default=str)

    def _prepare_log_dict(self, record: logging.LogRecord) -> dict[str, Any]:
        always_fields = {
            "message": record.getMessage(),
            "timestamp": self.formatTime(record, self.datefmt),
            "level": record.levelname,
            "name": record.name,
        }

        if record.exc_info:
            always_fields["exc_info"] = self.formatException(record.exc_info)

        if record.stack_info:
            always_fields["stack_info"] = self.formatStack(record.stack_info)

        message = {
            key: msg_val
            if (msg_val := always_fields.pop(val, None)) is not None
            else getattr(record, val)
            for key, val in self.fmt_keys.items()
        }
        message.update(always_fields)

        # Structured context passed through `extra=`
        for key, value in record.__dict__.items():
            if key not in _RESERVED and key not in message:
                message[key] = value

        return message


def setup_logging(
    level: str | int = logging.WARNING, fmt_keys: dict[str, str] | None = None
) -> logging.Logger:
    """
    Configure the root logger to emit JSON lines on stderr.

    `fmt_keys` maps output keys to LogRecord attributes; the default adds
    source location and thread name to every line.

    stdout is reserved for command output (verdicts, chart dumps, CSV).
    """
    logger = logging.getLogger()
    logger.setLevel(level)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JsonFormatter(DEFAULT_FMT_KEYS if fmt_keys is None else fmt_keys))

    # Remove existing handlers
    logger.handlers = []
    logger.addHandler(handler)

    return logger
