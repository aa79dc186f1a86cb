"""Heat-balance evaluation of the base correlations for an isolated annulus."""

from __future__ import annotations

import logging
import math
from typing import Callable, Optional

from ..envelope import warn_if_outside
from ..errors import NoConvergence, NoRoot
from ..props import sat_props
from ..types import CorrelationId, OperatingPoint, SatProps
from .biasi import biasi_branches
from .bowring import bowring_inlet
from .katto import katto_annulus

logger = logging.getLogger(__name__)

Q_LOW = 1.0  # kW/m2
Q_HIGH = 20000.0  # kW/m2
REL_TOL = 1e-6
MAX_ITER = 200


def exit_quality(q: float, op: OperatingPoint, props: Optional[SatProps] = None) -> float:
    """Exit equilibrium quality for a uniform heat flux ``q`` (kW/m2).

    Channel energy balance with P_he L / A_sc = 4 L / D_he.
    """

    props = props or sat_props(op.pressure)
    return 4.0 * q * op.length / (op.d_he * op.mass_flux * props.h_fg) - op.dh_sub_in / props.h_fg


def bisect_fixed_point(
    func: Callable[[float], float],
    q_low: float = Q_LOW,
    q_high: float = Q_HIGH,
    rel_tol: float = REL_TOL,
    max_iter: int = MAX_ITER,
) -> float:
    """Solve ``q = func(q)`` by bisection on ``g(q) = func(q) - q``.

    ``g`` must be positive at ``q_low`` and negative at ``q_high``. Stops when
    ``|g(q)| / q <= rel_tol``.
    """

    g_low = func(q_low) - q_low
    g_high = func(q_high) - q_high
    if not (g_low > 0 > g_high):
        raise NoRoot(q_low, q_high)

    residual = math.inf
    for iteration in range(1, max_iter + 1):
        q_mid = 0.5 * (q_low + q_high)
        g_mid = func(q_mid) - q_mid
        residual = abs(g_mid) / q_mid
        if residual <= rel_tol:
            logger.debug("heat balance converged in %d iterations at q=%.6g", iteration, q_mid)
            return q_mid
        if g_mid > 0:
            q_low = q_mid
        else:
            q_high = q_mid
    raise NoConvergence(max_iter, residual)


def heat_balance_chf(corr: CorrelationId, op: OperatingPoint) -> float:
    """CHF (kW/m2) of ``corr`` made consistent with the channel energy balance."""

    corr = CorrelationId(corr)
    props = sat_props(op.pressure)
    if corr is CorrelationId.BOWRING:
        return bowring_inlet(op, props)
    if corr is CorrelationId.KATTO:
        return katto_annulus(op, props)

    warn_if_outside(op, "heat_balance_chf")

    def biasi_at_exit(q: float) -> float:
        # Raw branches: past x_e = 1 both go negative, which keeps the bracket well defined.
        x_e = exit_quality(q, op, props)
        return max(biasi_branches(x_e, op.d_he, op.mass_flux, op.pressure))

    return bisect_fixed_point(biasi_at_exit)
