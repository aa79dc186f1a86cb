"""Katto generalized CHF correlation applied to inner-heated annuli.

Katto (1979), "Generalized correlation of critical heat flux for the forced
convection boiling in vertical uniformly heated annuli", Int. J. Heat Mass
Transfer 22, 575-584, correlates inner-heated annulus data with the round-tube
generalized correlation by taking the heated equivalent diameter
D_he = 4 A_flow / P_heated as the characteristic diameter instead of the
hydraulic diameter. The annulus modification is therefore confined to the
length ratio: l/d = L / D_he everywhere it appears (the L-regime constant C,
every q_c0 regime equation and the subcooling factors K). R and W carry no
diameter and are unchanged, and no separate annulus K-factor is applied.
Regime equations and selection rules follow the consolidated set of
Katto & Ohno (1984), Int. J. Heat Mass Transfer 27, 1641-1648.

Dimensionless groups: R = rho_g / rho_f, W = sigma rho_f / (G^2 L),
l/d = L / D_he. CHF = q_c0 G h_fg (1 + K dh_sub_in / h_fg).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..envelope import warn_if_outside
from ..errors import DomainError
from ..props import sat_props
from ..types import OperatingPoint, SatProps

HIGH_PRESSURE_DENSITY_RATIO = 0.15


class KattoRegime(str, Enum):
    L = "L"
    H = "H"
    N = "N"
    HP_H = "HP-H"
    HP_N = "HP-N"


@dataclass(frozen=True)
class KattoEvaluation:
    q_c0: float  # dimensionless, q / (G h_fg) without subcooling
    k: float
    regime: KattoRegime
    chf: float  # kW/m2


def _l_regime_constant(l_over_d: float) -> float:
    if l_over_d < 50.0:
        return 0.25
    if l_over_d <= 150.0:
        return 0.25 + 0.0009 * (l_over_d - 50.0)
    return 0.34


def evaluate_katto(op: OperatingPoint, props: Optional[SatProps] = None) -> KattoEvaluation:
    """Full Katto evaluation with the selected regime."""

    warn_if_outside(op, "katto_annulus")
    props = props or sat_props(op.pressure)
    r = props.rho_g / props.rho_f
    w = props.sigma * props.rho_f / (op.mass_flux**2 * op.length)
    l_over_d = op.length / op.d_he
    d_over_l = 1.0 / l_over_d
    if not (r > 0 and w > 0 and math.isfinite(r) and math.isfinite(w)):
        raise DomainError(f"Katto dimensionless groups undefined (R={r!r}, W={w!r})")

    c = _l_regime_constant(l_over_d)
    q1 = c * w**0.043 / l_over_d
    q2 = 0.10 * r**0.133 * w ** (1.0 / 3.0) / (1.0 + 0.0031 * l_over_d)
    q3 = 0.098 * r**0.133 * w**0.433 * l_over_d**0.27 / (1.0 + 0.0031 * l_over_d)
    q4 = 0.0384 * r**0.6 * w**0.173 / (1.0 + 0.280 * w**0.233 * l_over_d)
    q5 = 0.234 * r**0.513 * w**0.433 * l_over_d**0.27 / (1.0 + 0.0031 * l_over_d)

    k1 = 1.043 / (4.0 * c * w**0.043)
    k2 = (5.0 / 6.0) * (0.0124 + d_over_l) / (r**0.133 * w ** (1.0 / 3.0))
    k3 = 1.12 * (1.52 * w**0.233 + d_over_l) / (r**0.6 * w**0.173)

    if r < HIGH_PRESSURE_DENSITY_RATIO:
        if q1 < q2:
            q_c0, regime = q1, KattoRegime.L
        elif q2 < q3:
            q_c0, regime = q2, KattoRegime.H
        else:
            q_c0, regime = q3, KattoRegime.N
        k = k1 if k1 > k2 else k2
    else:
        if q1 < q5:
            q_c0, regime = q1, KattoRegime.L
        elif q5 > q4:
            q_c0, regime = q5, KattoRegime.HP_N
        else:
            q_c0, regime = q4, KattoRegime.HP_H
        if k1 > k2:
            k = k1
        elif k2 < k3:
            k = k2
        else:
            k = k3

    if not (math.isfinite(q_c0) and q_c0 > 0 and math.isfinite(k)):
        raise DomainError(f"Katto regime selection undefined at {op} (q_c0={q_c0!r}, K={k!r})")
    chf = q_c0 * op.mass_flux * props.h_fg * (1.0 + k * op.dh_sub_in / props.h_fg)
    return KattoEvaluation(q_c0=q_c0, k=k, regime=regime, chf=chf)


def katto_annulus(op: OperatingPoint, props: Optional[SatProps] = None) -> float:
    """Katto CHF (kW/m2) with characteristic diameter D_he."""

    return evaluate_katto(op, props).chf


def katto_regime(op: OperatingPoint, props: Optional[SatProps] = None) -> KattoRegime:
    return evaluate_katto(op, props).regime
