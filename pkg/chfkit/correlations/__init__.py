"""Empirical CHF correlations adapted to inner-heated annuli."""

from .biasi import biasi_branches, biasi_local
from .bowring import bowring_inlet
from .geometry import heated_equivalent_diameter, hydraulic_diameter
from .heat_balance import exit_quality, heat_balance_chf
from .katto import KattoRegime, katto_annulus, katto_regime

__all__ = [
    "KattoRegime",
    "biasi_branches",
    "biasi_local",
    "bowring_inlet",
    "exit_quality",
    "heat_balance_chf",
    "heated_equivalent_diameter",
    "hydraulic_diameter",
    "katto_annulus",
    "katto_regime",
]
