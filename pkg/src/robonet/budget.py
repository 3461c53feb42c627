"""Enumeration budget shared by the exhaustive-search code paths."""
from __future__ import annotations

import os

DEFAULT_SUBSET_BUDGET = 10**6

ENV_VAR = "ROBONET_BUDGET"


def resolve_budget(explicit: int | None = None) -> int:
    """Pick the subset budget: explicit value, else environment, else default."""
    if explicit is not None:
        return int(explicit)
    raw = os.environ.get(ENV_VAR)
    if raw:
        return int(raw)
    return DEFAULT_SUBSET_BUDGET
