import logging
import logging.handlers
from pathlib import Path

from pythonjsonlogger import jsonlogger

from src import config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class CustomLogger:
    """Custom logger with console and optional rotating-file output"""

    def __init__(self, name: str, level: str = None):
        self._name = name
        self.logger = logging.getLogger(name)
        self.logger.setLevel(getattr(logging, (level or config.LOG_LEVEL).upper()))
        self.logger.propagate = False

        # Clear any existing handlers to avoid duplicates
        if self.logger.hasHandlers():
            self.logger.handlers.clear()

        formatter = self._make_formatter(config.LOG_FORMAT)

        if config.LOG_DIR:
            try:
                logs_dir = Path(config.LOG_DIR)
                logs_dir.mkdir(parents=True, exist_ok=True)
                file_handler = logging.handlers.RotatingFileHandler(
                    filename=logs_dir / f"{name}.log",
                    maxBytes=5 * 1024 * 1024,  # 5 MB
                    backupCount=3
                )
                file_handler.setFormatter(formatter)
                self.logger.addHandler(file_handler)
            except OSError as e:
                # Continue with console logging only
                logging.getLogger(__name__).warning(f"Could not create log file for {name}: {str(e)}")

        # Console output goes to stderr; stdout carries command results
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

    @staticmethod
    def _make_formatter(log_format: str) -> logging.Formatter:
        if log_format == 'json':
            return jsonlogger.JsonFormatter(LOG_FORMAT, datefmt=DATE_FORMAT)
        return logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    @property
    def name(self):
        return self._name

    def is_debug(self) -> bool:
        return self.logger.isEnabledFor(logging.DEBUG)

    def debug(self, message):
        self.logger.debug(message)

    def info(self, message):
        self.logger.info(message)

    def warning(self, message):
        self.logger.warning(message)

    def error(self, message):
        self.logger.error(message)

    def critical(self, message):
        self.logger.critical(message)

    def exception(self, message: str, *args, exc_info=True, **kwargs):
        self.logger.exception(message, *args, exc_info=exc_info, **kwargs)
