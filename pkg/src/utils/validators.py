import re

from .exceptions import ArityLimitError

IDENTIFIER_PATTERN = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')
TRIT_STRING_PATTERN = re.compile(r'^[012]*$')


def is_valid_identifier(name: str) -> bool:
    """Validate a variable name: a letter followed by letters, digits or underscores."""
    return isinstance(name, str) and bool(IDENTIFIER_PATTERN.match(name))


def is_valid_trit(value) -> bool:
    """Validate a logic value (bools are rejected even though they are ints)."""
    return isinstance(value, int) and not isinstance(value, bool) and 0 <= value <= 2


def is_valid_trit_string(text: str) -> bool:
    """Validate a compact run of output trits."""
    return bool(TRIT_STRING_PATTERN.match(text))


def check_arity(arity: int, limit: int) -> None:
    """Reject exhaustive enumeration over more than `limit` variables."""
    if arity > limit:
        raise ArityLimitError(arity, limit)
