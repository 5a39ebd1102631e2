"""Size caps and defaults, overridable through environment variables.

Caps exist to keep enumerations at desk scale; exceeding one raises
SizeLimitError rather than silently truncating.
"""

import os

DEFAULT_NC_CAP = 14
DEFAULT_SET_CAP = 12
DEFAULT_TRUNCATION = 8

_ENV_MAX_N = "NCHOPF_MAX_N"
_ENV_TRUNCATION = "NCHOPF_TRUNCATION"


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        return fallback


def nc_cap() -> int:
    """Maximum n for non-crossing partition enumeration."""
    return _env_int(_ENV_MAX_N, DEFAULT_NC_CAP)


def set_cap() -> int:
    """Maximum n for set partition enumeration."""
    return _env_int(_ENV_MAX_N, DEFAULT_SET_CAP)


def default_truncation() -> int:
    """Default truncation degree for linear functionals."""
    return _env_int(_ENV_TRUNCATION, DEFAULT_TRUNCATION)
