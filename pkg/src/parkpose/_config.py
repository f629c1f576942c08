"""Degree caps shared by the enumeration and relation builders."""

import os

DEFAULT_MAX_DEGREE = 10
DEFAULT_CLOSURE_CAP = 6
ENV_VAR = "PARKPOSE_MAX_N"


def _override():
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return value


def max_degree() -> int:
    """Largest n for which objects over [n] are enumerated."""
    value = _override()
    return DEFAULT_MAX_DEGREE if value is None else value


def closure_cap() -> int:
    """Largest n for which full n! x n! relation matrices are built."""
    value = _override()
    return DEFAULT_CLOSURE_CAP if value is None else value


def check_degree(n: int, cap: int | None = None) -> int:
    if cap is None:
        cap = max_degree()
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive integer, got {n!r}")
    if n > cap:
        raise ValueError(f"degree {n} exceeds the cap {cap} (set {ENV_VAR} to raise it)")
    return n
