import logging
import math

import numpy as np
import pytest
from scipy.stats import qmc

from chfkit.correlations import (
    KattoRegime,
    biasi_branches,
    biasi_local,
    bowring_inlet,
    heat_balance_chf,
    heated_equivalent_diameter,
    hydraulic_diameter,
    katto_annulus,
    katto_regime,
)
from chfkit.correlations.katto import evaluate_katto
from chfkit.envelope import FEATURE_ENVELOPE
from chfkit.errors import DomainError
from chfkit.props import sat_props
from chfkit.types import CorrelationId, OperatingPoint

from oracles import biasi_oracle, bowring_oracle, katto_oracle

# Hand calculations (calculator, 5 significant figures) at d_he = 15.2 mm, G = 2000, P = 7.0 MPa:
#   Biasi, x_e = 0.2: low branch 266.62 W/cm2, high branch 183.9 W/cm2 -> 2666.2 kW/m2
#   Bowring, L = 2.0 m, dh_sub_in = 100: A = 5792.8, C = 1.4344 -> 1908.0 kW/m2
#   Katto, L = 2.0 m, dh_sub_in = 0: R = 0.049383, W = 1.6303e-6, N regime, q_c0 = 5.4325e-4 -> 1636.5 kW/m2
BIASI_HAND = 2666.2
BOWRING_HAND = 1908.0
KATTO_HAND = 1636.5

ENVELOPE_ORDER = ("d_he", "length", "pressure", "mass_flux", "dh_sub_in")


def _lhs_points(n, seed, extra_dims=0):
    sampler = qmc.LatinHypercube(d=len(ENVELOPE_ORDER) + extra_dims, seed=seed)
    unit = sampler.random(n)
    lows = [FEATURE_ENVELOPE[name].low for name in ENVELOPE_ORDER]
    highs = [FEATURE_ENVELOPE[name].high for name in ENVELOPE_ORDER]
    ops = [OperatingPoint(*qmc.scale(row[None, :5], lows, highs)[0].tolist()) for row in unit]
    return ops, unit[:, 5:]


def test_biasi_hand_checked_point():
    assert biasi_local(0.2, 0.0152, 2000.0, 7.0) == pytest.approx(BIASI_HAND, rel=2e-3)


def test_bowring_hand_checked_point(reference_op):
    assert bowring_inlet(reference_op) == pytest.approx(BOWRING_HAND, rel=2e-3)


def test_katto_hand_checked_point():
    op = OperatingPoint(d_he=0.0152, length=2.0, pressure=7.0, mass_flux=2000.0, dh_sub_in=0.0)
    assert katto_regime(op) is KattoRegime.N
    assert katto_annulus(op) == pytest.approx(KATTO_HAND, rel=5e-3)


def test_correlations_match_independent_oracles():
    ops, extra = _lhs_points(100, seed=2024, extra_dims=1)
    for op, (u,) in zip(ops, extra):
        x_e = -0.3 + 0.9 * float(u)
        assert biasi_local(x_e, op.d_he, op.mass_flux, op.pressure) == pytest.approx(
            biasi_oracle(x_e, op.d_he, op.mass_flux, op.pressure), rel=1e-9
        )
        args = (op.d_he, op.length, op.pressure, op.mass_flux, op.dh_sub_in)
        assert bowring_inlet(op) == pytest.approx(bowring_oracle(*args), rel=1e-9)
        assert katto_annulus(op) == pytest.approx(katto_oracle(*args), rel=1e-9)


def test_mid_envelope_reference_point_matches_oracles():
    op = OperatingPoint(d_he=0.0152, length=2.13, pressure=6.89, mass_flux=2000.0, dh_sub_in=300.0)
    args = (op.d_he, op.length, op.pressure, op.mass_flux, op.dh_sub_in)
    assert bowring_inlet(op) == pytest.approx(bowring_oracle(*args), rel=1e-12)
    assert katto_annulus(op) == pytest.approx(katto_oracle(*args), rel=1e-12)


def test_biasi_small_diameter_exponent_matches_oracle(caplog):
    with caplog.at_level(logging.WARNING, logger="chfkit.envelope"):
        value = biasi_local(0.1, 0.008, 1500.0, 8.0)
    assert value == pytest.approx(biasi_oracle(0.1, 0.008, 1500.0, 8.0), rel=1e-12)
    assert any("d_he" in message for message in caplog.messages)


def test_all_correlations_positive_over_envelope_sample():
    ops, _ = _lhs_points(1000, seed=99)
    for op in ops:
        for corr in CorrelationId:
            value = heat_balance_chf(corr, op)
            assert math.isfinite(value) and value > 0


def test_biasi_is_max_of_branches_and_nonincreasing_in_quality():
    previous = math.inf
    for x_e in np.linspace(0.0, 0.6, 50):
        value = biasi_local(float(x_e), 0.0152, 2000.0, 7.0)
        assert value == max(biasi_branches(float(x_e), 0.0152, 2000.0, 7.0))
        assert value <= previous
        previous = value


def test_biasi_rejects_quality_of_one_or_more():
    with pytest.raises(DomainError):
        biasi_local(1.0, 0.0152, 2000.0, 7.0)


def test_bowring_subcooling_and_length_trends():
    base = dict(d_he=0.0152, length=2.13, pressure=6.89, mass_flux=2000.0)
    saturated = bowring_inlet(OperatingPoint(dh_sub_in=0.0, **base))
    subcooled = bowring_inlet(OperatingPoint(dh_sub_in=300.0, **base))
    assert subcooled > saturated

    doubled = bowring_inlet(OperatingPoint(d_he=0.0152, length=4.26, pressure=6.89, mass_flux=2000.0, dh_sub_in=300.0))
    assert doubled < subcooled


def test_bowring_outside_published_pressure_range():
    with pytest.raises(DomainError):
        bowring_inlet(OperatingPoint(d_he=0.0152, length=2.0, pressure=19.5, mass_flux=2000.0, dh_sub_in=100.0))


def test_out_of_envelope_input_warns_but_evaluates(caplog):
    op = OperatingPoint(d_he=0.0152, length=2.0, pressure=18.0, mass_flux=2000.0, dh_sub_in=100.0)
    with caplog.at_level(logging.WARNING, logger="chfkit.envelope"):
        value = bowring_inlet(op)
    assert value > 0
    assert any("pressure" in message for message in caplog.messages)


def test_katto_without_subcooling_is_base_quality_flux():
    op = OperatingPoint(d_he=0.0152, length=2.13, pressure=6.89, mass_flux=2000.0, dh_sub_in=0.0)
    evaluation = evaluate_katto(op)
    assert evaluation.chf == evaluation.q_c0 * op.mass_flux * sat_props(op.pressure).h_fg


@pytest.mark.parametrize("pressure", [7.0, 15.0])
def test_katto_decreases_with_length_within_a_regime(pressure):
    sweep = []
    for length in np.linspace(0.74, 3.6, 50):
        op = OperatingPoint(d_he=0.0152, length=float(length), pressure=pressure, mass_flux=2000.0, dh_sub_in=0.0)
        sweep.append((katto_regime(op), katto_annulus(op)))
    same_regime_pairs = [(a, b) for a, b in zip(sweep, sweep[1:]) if a[0] is b[0]]
    assert same_regime_pairs
    for (_, before), (_, after) in same_regime_pairs:
        assert after < before


def test_katto_high_pressure_uses_high_pressure_regimes():
    op = OperatingPoint(d_he=0.0152, length=2.0, pressure=15.0, mass_flux=2000.0, dh_sub_in=0.0)
    assert katto_regime(op) in {KattoRegime.L, KattoRegime.HP_H, KattoRegime.HP_N}


def test_katto_annulus_uses_heated_equivalent_diameter():
    d_he = heated_equivalent_diameter(0.0215, 0.0120)
    d_hy = hydraulic_diameter(0.0215, 0.0120)
    op = OperatingPoint(d_he=d_he, length=2.0, pressure=7.0, mass_flux=2000.0, dh_sub_in=300.0)
    value = katto_annulus(op)
    assert value == pytest.approx(katto_oracle(d_he, 2.0, 7.0, 2000.0, 300.0), rel=1e-12)
    assert abs(value / katto_oracle(d_hy, 2.0, 7.0, 2000.0, 300.0) - 1.0) > 0.01
