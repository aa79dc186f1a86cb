"""Standalone base correlations behind the predictor interface."""

from __future__ import annotations

from ..correlations.heat_balance import heat_balance_chf
from ..types import CorrelationId, OperatingPoint
from .base import ChfModel


class CorrelationModel(ChfModel):
    """Heat-balance evaluation of one empirical correlation."""

    def __init__(self, corr: CorrelationId) -> None:
        self.corr = CorrelationId(corr)
        self.name = f"base-{self.corr.value}"

    def predict(self, op: OperatingPoint) -> float:
        return heat_balance_chf(self.corr, op)
