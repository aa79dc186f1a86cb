"""Seed resolution and the deterministic random generator used everywhere."""

from __future__ import annotations

import os
from typing import Optional

import numpy as np

from .errors import UsageError

SEED_ENV_VAR = "CHFKIT_SEED"
DEFAULT_SEED = 0


def make_generator(seed: int) -> np.random.Generator:
    """numpy ``Generator`` over the PCG64 bit generator (fixed algorithm, platform independent)."""

    return np.random.Generator(np.random.PCG64(seed))


def resolve_seed(explicit: Optional[int], default: int = DEFAULT_SEED) -> int:
    """``explicit`` if given, else ``$CHFKIT_SEED``, else ``default``."""

    if explicit is not None:
        return int(explicit)
    raw = os.getenv(SEED_ENV_VAR)
    if raw is not None and raw.strip():
        try:
            return int(raw)
        except ValueError as exc:
            raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from exc
    return default
