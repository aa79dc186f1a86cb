"""Bowring inlet-conditions CHF correlation.

Bowring (1972), "A simple but accurate round tube, uniform heat flux, dryout
correlation over the pressure range 0.7-17 MN/m2", AEEW-R 789. SI form:
q = (A + 0.25 D G dh_in) / (C + L) with the pressure functions F1..F4 of
p_R = 0.145 P (P in MPa). With h in kJ/kg the result is in kW/m2.
"""

from __future__ import annotations

import math
from typing import Optional, Tuple

from ..envelope import warn_if_outside
from ..errors import DomainError
from ..props import sat_props
from ..types import OperatingPoint, SatProps

P_RANGE_MPA = (0.2, 19.0)
REDUCED_PRESSURE_FACTOR = 0.145  # 1/MPa
G_REFERENCE = 1356.0  # kg/m2/s


def pressure_functions(p: float) -> Tuple[float, float, float, float]:
    """F1, F2, F3, F4 at pressure ``p`` (MPa)."""

    p_r = REDUCED_PRESSURE_FACTOR * p
    if p_r <= 1.0:
        f1 = (p_r**18.942 * math.exp(20.89 * (1.0 - p_r)) + 0.917) / 1.917
        f1_over_f2 = (p_r**1.316 * math.exp(2.444 * (1.0 - p_r)) + 0.309) / 1.309
        f3 = (p_r**17.023 * math.exp(16.658 * (1.0 - p_r)) + 0.667) / 1.667
    else:
        f1 = p_r**-0.368 * math.exp(0.648 * (1.0 - p_r))
        f1_over_f2 = p_r**-0.448 * math.exp(0.245 * (1.0 - p_r))
        f3 = p_r**0.219
    f2 = f1 / f1_over_f2
    f4 = f3 * p_r**1.649
    return f1, f2, f3, f4


def bowring_inlet(op: OperatingPoint, props: Optional[SatProps] = None) -> float:
    """Bowring CHF (kW/m2) from inlet conditions, diameter argument D_he."""

    low, high = P_RANGE_MPA
    if not (low <= op.pressure <= high):
        raise DomainError(f"Bowring is defined for {low} <= P <= {high} MPa, got {op.pressure!r}")
    warn_if_outside(op, "bowring_inlet")
    props = props or sat_props(op.pressure)
    d, g, length = op.d_he, op.mass_flux, op.length
    f1, f2, f3, f4 = pressure_functions(op.pressure)
    n = 2.0 - 0.5 * REDUCED_PRESSURE_FACTOR * op.pressure
    a = 2.317 * (props.h_fg * d * g / 4.0) * f1 / (1.0 + 0.0143 * f2 * math.sqrt(d) * g)
    c = 0.077 * f3 * d * g / (1.0 + 0.347 * f4 * (g / G_REFERENCE) ** n)
    denominator = c + length
    if denominator <= 0 or a < 0:
        raise DomainError(f"Bowring internal factors invalid (A={a!r}, C+L={denominator!r})")
    value = (a + 0.25 * d * g * op.dh_sub_in) / denominator
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f"Bowring produced {value!r} at {op}")
    return value
