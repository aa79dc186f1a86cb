"""Independent transcriptions of the three base correlations, used as test oracles.

Written from the published forms, not from the library code: Biasi directly in
its original cgs units, Bowring in SI with its four pressure functions spelled
out, Katto with explicit min/max regime selection.
"""

from __future__ import annotations

import math

from chfkit.props import sat_props


def biasi_oracle(x_e: float, d_he: float, g: float, p: float) -> float:
    """kW/m2; d_he in m, g in kg/m2/s, p in MPa."""

    D = d_he * 1e2  # cm
    G = g / 10.0  # g/cm2/s
    P = p * 1e1  # bar
    n = 0.6 if D < 1.0 else 0.4
    f_p = 0.7249 + 0.099 * P * math.exp(-0.032 * P)
    h_p = -1.159 + 0.149 * P * math.exp(-0.019 * P) + 8.99 * P / (10.0 + P * P)
    q_low = 1.883e3 / (D**n * G ** (1 / 6)) * (f_p / G ** (1 / 6) - x_e)
    q_high = 3.78e3 * h_p / (D**n * G**0.6) * (1.0 - x_e)
    return max(q_low, q_high) * 10.0


def bowring_oracle(d_he: float, length: float, p: float, g: float, dh_in: float) -> float:
    pr = 0.145 * p
    if pr > 1.0:
        F1 = pr ** (-0.368) * math.exp(0.648 * (1 - pr))
        F2 = F1 / (pr ** (-0.448) * math.exp(0.245 * (1 - pr)))
        F3 = pr**0.219
    else:
        F1 = (pr**18.942 * math.exp(20.89 * (1 - pr)) + 0.917) / 1.917
        F2 = F1 / ((pr**1.316 * math.exp(2.444 * (1 - pr)) + 0.309) / 1.309)
        F3 = (pr**17.023 * math.exp(16.658 * (1 - pr)) + 0.667) / 1.667
    F4 = F3 * pr**1.649
    hfg = sat_props(p).h_fg
    n = 2.0 - 0.5 * pr
    A = 2.317 * (hfg * d_he * g / 4.0) * F1 / (1.0 + 0.0143 * F2 * d_he**0.5 * g)
    C = 0.077 * F3 * d_he * g / (1.0 + 0.347 * F4 * (g / 1356.0) ** n)
    return (A + 0.25 * d_he * g * dh_in) / (C + length)


def katto_oracle(d_he: float, length: float, p: float, g: float, dh_in: float) -> float:
    s = sat_props(p)
    R = s.rho_g / s.rho_f
    W = s.sigma * s.rho_f / (g * g * length)
    z = length / d_he

    if z < 50:
        C = 0.25
    elif z > 150:
        C = 0.34
    else:
        C = 0.25 + 0.0009 * (z - 50)

    q1 = C * W**0.043 / z
    q2 = 0.1 * R**0.133 * W ** (1 / 3) / (1 + 0.0031 * z)
    q3 = 0.098 * R**0.133 * W**0.433 * z**0.27 / (1 + 0.0031 * z)
    q4 = 0.0384 * R**0.6 * W**0.173 / (1 + 0.28 * W**0.233 * z)
    q5 = 0.234 * R**0.513 * W**0.433 * z**0.27 / (1 + 0.0031 * z)
    K1 = 1.043 / (4 * C * W**0.043)
    K2 = 5 / 6 * (0.0124 + 1 / z) / (R**0.133 * W ** (1 / 3))
    K3 = 1.12 * (1.52 * W**0.233 + 1 / z) / (R**0.6 * W**0.173)

    if R < 0.15:
        q0 = q1 if q1 < q2 else min(q2, q3)
        K = max(K1, K2)
    else:
        q0 = q1 if q1 < q5 else max(q4, q5)
        if K1 > K2:
            K = K1
        else:
            K = min(K2, K3)
    return q0 * g * s.h_fg * (1 + K * dh_in / s.h_fg)
