"""Stage that builds the training target for every record."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..dataset.residuals import compute_residuals
from ..types import CorrelationId
from .base import BaseStage, PipelineState


class ResidualStage(BaseStage):
    """Residuals against the base correlation for hybrids, measured CHF for pure ML.

    Base estimates are computed for all records, not only the training partition,
    so that a correlation failure anywhere in the data set is reported up front.
    """

    def __init__(self, base: Optional[CorrelationId] = None) -> None:
        super().__init__(name="residuals")
        self.base = None if base is None else CorrelationId(base)

    def run(self, state: PipelineState) -> PipelineState:
        base = self.base
        if base is None:
            state.residuals = []
            state.targets = np.asarray([record.q_cr for record in state.records], dtype=np.float64)
            self.logger.info("Pure ML target: measured CHF for %d records", len(state.records))
            return state
        state.residuals = compute_residuals(state.records, base)
        state.targets = np.asarray([item.residual for item in state.residuals], dtype=np.float64)
        self.logger.info(
            "Residuals against %s: mean %.3f kW/m2, std %.3f kW/m2",
            base.value,
            float(state.targets.mean()),
            float(state.targets.std()),
        )
        return state
