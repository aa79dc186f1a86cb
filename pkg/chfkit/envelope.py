"""Ranges of the compiled annulus CHF experiments (all four datasets combined)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .types import OperatingPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bounds:
    low: float
    high: float

    def contains(self, value: float) -> bool:
        return self.low <= value <= self.high

    @property
    def span(self) -> float:
        return self.high - self.low


# OperatingPoint units: d_he in m, L in m, P in MPa, G in kg/m2/s, dh in kJ/kg.
FEATURE_ENVELOPE: Dict[str, Bounds] = {
    "d_he": Bounds(11.30e-3, 96.30e-3),
    "length": Bounds(0.74, 3.60),
    "pressure": Bounds(4.13, 15.55),
    "mass_flux": Bounds(249.0, 5913.0),
    "dh_sub_in": Bounds(6.98, 1163.03),
}
CHF_ENVELOPE = Bounds(323.0, 6000.0)


def out_of_envelope(op: OperatingPoint) -> List[Tuple[str, float, Bounds]]:
    """Return ``(field, value, bounds)`` for every feature outside the envelope."""

    violations: List[Tuple[str, float, Bounds]] = []
    for name, value in zip(FEATURE_ENVELOPE.keys(), op.as_features()):
        bounds = FEATURE_ENVELOPE[name]
        if not bounds.contains(value):
            violations.append((name, value, bounds))
    return violations


def warn_if_outside(op: OperatingPoint, context: str) -> None:
    """Advisory check: correlations still evaluate outside the data envelope."""

    warn_outside(context, **dict(zip(FEATURE_ENVELOPE.keys(), op.as_features())))


def warn_outside(context: str, **values: float) -> None:
    """Advisory check for a subset of features given by name."""

    for name, value in values.items():
        bounds = FEATURE_ENVELOPE[name]
        if not bounds.contains(value):
            logger.warning(
                "%s: %s=%g outside data envelope [%g, %g]", context, name, value, bounds.low, bounds.high
            )
