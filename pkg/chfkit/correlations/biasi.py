"""Biasi local-conditions CHF correlation.

Biasi, Clerici, Garribba, Sala, Tozzi (1967), "Studies on burnout, part 3",
Energia Nucleare 14(9). Original units: D in cm, G in g/cm2/s, P in bar,
q in W/cm2. The annulus adaptation evaluates it with D = D_he.
"""

from __future__ import annotations

import math
from typing import Tuple

from ..envelope import warn_outside
from ..errors import DomainError

LOW_QUALITY_COEFF = 1.883e3
HIGH_QUALITY_COEFF = 3.78e3
G_EXPONENT_LOW = 1.0 / 6.0
G_EXPONENT_HIGH = 0.6
D_EXPONENT_LARGE = 0.4  # D >= 1 cm
D_EXPONENT_SMALL = 0.6  # D < 1 cm

_W_CM2_TO_KW_M2 = 10.0


def pressure_factor_f(p_bar: float) -> float:
    return 0.7249 + 0.099 * p_bar * math.exp(-0.032 * p_bar)


def pressure_factor_h(p_bar: float) -> float:
    return -1.159 + 0.149 * p_bar * math.exp(-0.019 * p_bar) + 8.99 * p_bar / (10.0 + p_bar**2)


def biasi_branches(x_e: float, d_he: float, g: float, p: float) -> Tuple[float, float]:
    """Low- and high-quality branch values in kW/m2, without domain checks."""

    d_cm = d_he * 100.0
    g_cgs = g * 0.1
    p_bar = p * 10.0
    n = D_EXPONENT_LARGE if d_cm >= 1.0 else D_EXPONENT_SMALL
    g_sixth = g_cgs**G_EXPONENT_LOW
    low = LOW_QUALITY_COEFF / (d_cm**n * g_sixth) * (pressure_factor_f(p_bar) / g_sixth - x_e)
    high = HIGH_QUALITY_COEFF * pressure_factor_h(p_bar) / (d_cm**n * g_cgs**G_EXPONENT_HIGH) * (1.0 - x_e)
    return low * _W_CM2_TO_KW_M2, high * _W_CM2_TO_KW_M2


def biasi_local(x_e: float, d_he: float, g: float, p: float) -> float:
    """Biasi CHF (kW/m2) at local quality ``x_e``: the larger of the two branches."""

    if not x_e < 1.0:
        raise DomainError(f"Biasi requires x_e < 1, got {x_e!r}")
    if min(d_he, g, p) <= 0:
        raise DomainError(f"Biasi requires positive d_he, G, P, got {(d_he, g, p)!r}")
    warn_outside("biasi_local", d_he=d_he, mass_flux=g, pressure=p)
    value = max(biasi_branches(x_e, d_he, g, p))
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f"Biasi branches are nonpositive at x_e={x_e!r}, d_he={d_he!r}, G={g!r}, P={p!r}")
    return value
