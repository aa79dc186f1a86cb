"""Saturated water properties along the saturation line.

Values are tabulated every 0.5 MPa from 0.5 to 21.0 MPa and linearly
interpolated. Saturation temperature, specific volumes and enthalpies are
transcribed from the IAPWS-IF97 based saturation-pressure steam table
(Cengel & Boles, Table A-5 and its 0.5 MPa refinement). Surface tension is
evaluated once at each node from the IAPWS (1994) release on the surface
tension of ordinary water substance.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import PressureOutOfRange
from .types import SatProps

P_MIN = 0.5
P_MAX = 21.0

# p (MPa), T_sat (C), v_f (m3/kg), v_g (m3/kg), h_f (kJ/kg), h_fg (kJ/kg)
_SATURATION_TABLE = np.array(
    [
        (0.5, 151.83, 0.001093, 0.37483, 640.09, 2108.0),
        (1.0, 179.88, 0.001127, 0.19436, 762.51, 2014.6),
        (1.5, 198.29, 0.001154, 0.13171, 844.55, 1946.4),
        (2.0, 212.38, 0.001177, 0.099585, 908.47, 1889.8),
        (2.5, 223.95, 0.001197, 0.079949, 961.91, 1840.0),
        (3.0, 233.85, 0.001217, 0.066664, 1008.3, 1794.9),
        (3.5, 242.56, 0.001235, 0.057058, 1049.8, 1752.8),
        (4.0, 250.35, 0.001252, 0.049776, 1087.4, 1713.5),
        (4.5, 257.44, 0.001269, 0.044059, 1122.1, 1675.6),
        (5.0, 263.94, 0.001286, 0.039446, 1154.5, 1639.7),
        (5.5, 269.97, 0.001302, 0.035642, 1184.6, 1605.4),
        (6.0, 275.59, 0.001319, 0.032449, 1213.8, 1570.9),
        (6.5, 280.86, 0.001336, 0.029728, 1241.3, 1538.3),
        (7.0, 285.83, 0.001352, 0.027378, 1267.5, 1506.0),
        (7.5, 290.54, 0.001368, 0.025323, 1292.7, 1473.8),
        (8.0, 295.01, 0.001385, 0.023526, 1317.1, 1441.6),
        (8.5, 299.27, 0.001401, 0.021914, 1340.6, 1410.2),
        (9.0, 303.35, 0.001418, 0.020490, 1363.1, 1379.3),
        (9.5, 307.25, 0.001435, 0.019190, 1385.8, 1349.0),
        (10.0, 311.00, 0.001453, 0.018030, 1408.0, 1319.0),
        (10.5, 314.60, 0.001471, 0.016960, 1429.3, 1289.3),
        (11.0, 318.08, 0.001489, 0.015990, 1450.2, 1259.9),
        (11.5, 321.43, 0.001507, 0.015090, 1470.9, 1227.5),
        (12.0, 324.68, 0.001526, 0.014264, 1491.5, 1194.1),
        (12.5, 327.81, 0.001546, 0.013500, 1511.5, 1162.9),
        (13.0, 330.85, 0.001566, 0.012780, 1531.4, 1131.2),
        (13.5, 333.81, 0.001588, 0.012115, 1551.2, 1099.4),
        (14.0, 336.67, 0.001610, 0.011485, 1571.0, 1066.9),
        (14.5, 339.46, 0.001633, 0.010896, 1590.6, 1033.9),
        (15.0, 342.16, 0.001657, 0.010338, 1610.3, 999.9),
        (15.5, 344.79, 0.001683, 0.009809, 1630.1, 965.8),
        (16.0, 347.36, 0.001710, 0.009309, 1649.9, 930.8),
        (16.5, 349.86, 0.001739, 0.008830, 1670.0, 894.6),
        (17.0, 352.29, 0.001770, 0.008371, 1690.3, 856.9),
        (17.5, 354.67, 0.001804, 0.007927, 1710.9, 818.1),
        (18.0, 356.99, 0.001840, 0.007502, 1732.0, 777.8),
        (18.5, 359.26, 0.001881, 0.007085, 1754.0, 734.1),
        (19.0, 361.47, 0.001926, 0.006677, 1776.9, 688.0),
        (19.5, 363.63, 0.001977, 0.006270, 1801.3, 639.0),
        (20.0, 365.75, 0.002038, 0.005862, 1827.2, 585.5),
        (20.5, 367.82, 0.002110, 0.005440, 1856.0, 523.0),
        (21.0, 369.83, 0.002207, 0.004994, 1889.2, 450.4),
    ],
    dtype=np.float64,
)

_T_CRITICAL_K = 647.096


def _surface_tension(t_sat_c: np.ndarray) -> np.ndarray:
    tau = 1.0 - (t_sat_c + 273.15) / _T_CRITICAL_K
    return 235.8e-3 * tau**1.256 * (1.0 - 0.625 * tau)


PRESSURE_NODES = _SATURATION_TABLE[:, 0].copy()
_COLUMNS = {
    "h_f": _SATURATION_TABLE[:, 4].copy(),
    "h_fg": _SATURATION_TABLE[:, 5].copy(),
    "rho_f": 1.0 / _SATURATION_TABLE[:, 2],
    "rho_g": 1.0 / _SATURATION_TABLE[:, 3],
    "sigma": _surface_tension(_SATURATION_TABLE[:, 1]),
}
for _column in (PRESSURE_NODES, *_COLUMNS.values()):
    _column.setflags(write=False)


def node_values(index: int) -> SatProps:
    """Stored properties at table node ``index``."""

    return SatProps(
        p=float(PRESSURE_NODES[index]),
        **{name: float(values[index]) for name, values in _COLUMNS.items()},
    )


@lru_cache(maxsize=4096)
def sat_props(p: float) -> SatProps:
    """Saturation properties at pressure ``p`` (MPa), linear between nodes."""

    if not (P_MIN <= p <= P_MAX):
        raise PressureOutOfRange(p, P_MIN, P_MAX)
    return SatProps(
        p=float(p),
        **{name: float(np.interp(p, PRESSURE_NODES, values)) for name, values in _COLUMNS.items()},
    )
