import os
from pathlib import Path

from dotenv import load_dotenv

from src.utils.exceptions import ConfigError

# Define the base directory (project root)
BASE_DIR = Path(__file__).parent.parent.parent

# Load environment variables
load_dotenv(BASE_DIR / '.env')

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')
LOG_FORMATS = ('text', 'json')


def _positive_int(variable: str, default: int) -> int:
    raw = os.getenv(variable)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{variable} must be an integer, got '{raw}'")
    if value < 1:
        raise ConfigError(f"{variable} must be positive, got {value}")
    return value


def _choice(variable: str, default: str, choices, normalize=str.lower) -> str:
    value = os.getenv(variable, default).strip()
    if normalize(value) not in choices:
        raise ConfigError(f"{variable} must be one of {', '.join(choices)}, got '{value}'")
    return normalize(value)


# Enumeration and simplification limits
ARITY_LIMIT = _positive_int('TERNARY_ARITY_LIMIT', 12)
SIMPLIFY_BUDGET = _positive_int('TERNARY_SIMPLIFY_BUDGET', 32)
RESYNTHESIS_MAX_VARS = _positive_int('TERNARY_RESYNTHESIS_MAX_VARS', 2)

# Logging
LOG_LEVEL = _choice('TERNARY_LOG_LEVEL', 'WARNING', LOG_LEVELS, normalize=str.upper)
LOG_FORMAT = _choice('TERNARY_LOG_FORMAT', 'text', LOG_FORMATS)
LOG_DIR = os.getenv('TERNARY_LOG_DIR') or None
