"""Annulus characteristic lengths."""

from __future__ import annotations

from ..types import AnnulusGeometry


def heated_equivalent_diameter(d_o: float, d_i: float) -> float:
    """D_he = 4 A_sc / P_he = (d_o^2 - d_i^2) / d_i for an inner-heated annulus (m)."""

    return AnnulusGeometry(d_i=d_i, d_o=d_o).d_he


def hydraulic_diameter(d_o: float, d_i: float) -> float:
    """D_hy = 4 A_sc / P_wetted = d_o - d_i (m)."""

    geometry = AnnulusGeometry(d_i=d_i, d_o=d_o)
    return geometry.d_o - geometry.d_i
