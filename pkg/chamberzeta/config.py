import os
import logging
from dotenv import load_dotenv


class Config:
    """Runtime configuration for the chamber zeta toolkit."""

    def __init__(self, env_file: str = '.env'):
        # Load environment variables from .env file
        load_dotenv(env_file)

        # Logging Configuration
        self.LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()
        self.LOG_FILE = os.getenv('LOG_FILE', '')

        # Parallelism
        self.WORKERS = int(os.getenv('ZETA_WORKERS', '1'))

        # Sizes of the heavier checks run by `verify`
        self.VERIFY_BLOCK_MAX_SYMBOLIC = int(os.getenv('ZETA_VERIFY_BLOCK_MAX_SYMBOLIC', '2'))
        self.VERIFY_BLOCK_MAX_NUMERIC = int(os.getenv('ZETA_VERIFY_BLOCK_MAX_NUMERIC', '3'))
        self.VERIFY_EULER_MAX_LENGTH = int(os.getenv('ZETA_VERIFY_EULER_MAX_LENGTH', '12'))

        # Setup logging
        self._setup_logging()

        # Validate configuration
        self._validate_config()

    def _setup_logging(self):
        """Setup logging configuration."""
        log_level = getattr(logging, self.LOG_LEVEL, logging.WARNING)

        # Create formatters
        console_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
        file_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
        )

        # Setup root logger
        root_logger = logging.getLogger()
        root_logger.setLevel(log_level)

        # Clear existing handlers
        for handler in root_logger.handlers[:]:
            root_logger.removeHandler(handler)

        # Console handler (stderr, stdout is reserved for reports)
        console_handler = logging.StreamHandler()
        console_handler.setLevel(log_level)
        console_handler.setFormatter(console_formatter)
        root_logger.addHandler(console_handler)

        if not self.LOG_FILE:
            return

        try:
            file_handler = logging.FileHandler(self.LOG_FILE)
            file_handler.setLevel(log_level)
            file_handler.setFormatter(file_formatter)
            root_logger.addHandler(file_handler)
        except (OSError, IOError) as e:
            logging.warning(f"Could not create log file {self.LOG_FILE}: {e}")

    def _validate_config(self):
        """Validate configuration values."""
        errors = []

        if not isinstance(logging.getLevelName(self.LOG_LEVEL), int):
            errors.append(f"LOG_LEVEL '{self.LOG_LEVEL}' is not a logging level")

        if self.WORKERS < 1:
            errors.append("ZETA_WORKERS must be at least 1")

        if self.VERIFY_BLOCK_MAX_SYMBOLIC < 1:
            errors.append("ZETA_VERIFY_BLOCK_MAX_SYMBOLIC must be at least 1")

        if self.VERIFY_BLOCK_MAX_NUMERIC < 1:
            errors.append("ZETA_VERIFY_BLOCK_MAX_NUMERIC must be at least 1")

        if self.VERIFY_EULER_MAX_LENGTH < 1:
            errors.append("ZETA_VERIFY_EULER_MAX_LENGTH must be at least 1")

        if errors:
            error_msg = "Configuration errors:\n" + "\n".join(f"- {error}" for error in errors)
            raise ValueError(error_msg)

        logging.debug("Configuration validated successfully")

    def get_summary(self) -> str:
        """Get a summary of the configuration."""
        return f"""Chamber Zeta Configuration:
- Log Level: {self.LOG_LEVEL}
- Log File: {self.LOG_FILE or '(console only)'}
- Workers: {self.WORKERS}
- Verify block limit: {self.VERIFY_BLOCK_MAX_SYMBOLIC} symbolic, {self.VERIFY_BLOCK_MAX_NUMERIC} numeric
- Verify Euler length: {self.VERIFY_EULER_MAX_LENGTH}"""
