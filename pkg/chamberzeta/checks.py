import logging

from .algebra.qmode import QMode, SYMBOLIC_LABEL

logger = logging.getLogger(__name__)

MIN_Q = 2


def check_q(q_str: str) -> tuple:
    """
    Validate and parse a value of q

    Args:
        q_str: 'sym' or an integer given as text

    Returns:
        Tuple of (is_valid: bool, q_mode: QMode or None, error_message: str or None)
    """
    if not q_str or not q_str.strip():
        return False, None, "q cannot be empty"

    cleaned = q_str.strip().lower()
    if cleaned == SYMBOLIC_LABEL:
        return True, QMode.symbolic(), None

    try:
        value = int(cleaned)
    except ValueError:
        return False, None, f"q must be '{SYMBOLIC_LABEL}' or an integer, got '{q_str}'"

    if value < MIN_Q:
        return False, None, f"q must be at least {MIN_Q}"

    return True, QMode.numeric(value), None


def check_q_list(text: str) -> tuple:
    """
    Validate a comma separated list of q values

    Returns:
        Tuple of (is_valid: bool, modes: list of QMode or None, error_message: str or None)
    """
    if not text or not text.strip():
        return False, None, "q list cannot be empty"

    modes = []
    for part in text.split(','):
        is_valid, mode, error = check_q(part)
        if not is_valid:
            return False, None, error
        if mode not in modes:
            modes.append(mode)
    return True, modes, None


def check_positive(value_str: str, minimum: int = 1, name: str = "value") -> tuple:
    """Parse an integer that must be at least `minimum`."""
    try:
        value = int(str(value_str).strip())
    except ValueError:
        return False, None, f"{name} must be an integer, got '{value_str}'"

    if value < minimum:
        return False, None, f"{name} must be at least {minimum}"

    return True, value, None


def q_is_valid(q_str: str) -> bool:
    is_valid, _, _ = check_q(q_str)
    return is_valid
