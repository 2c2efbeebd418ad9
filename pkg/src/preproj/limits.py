"""Desk-scale guards for combinatorially explosive sweeps."""

import os

DEFAULT_MAX_N = 6


def scale_limit() -> int:
    """Largest n the exhaustive operations accept; PREPROJ_MAX_N overrides."""
    raw = os.environ.get("PREPROJ_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_N
