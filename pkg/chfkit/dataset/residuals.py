"""Experimental-minus-correlation residuals for hybrid training."""

from __future__ import annotations

from typing import List, Sequence

from ..correlations.heat_balance import heat_balance_chf
from ..errors import ChfError, ResidualError
from ..types import ChfRecord, CorrelationId, ResidualRecord


def compute_residuals(records: Sequence[ChfRecord], corr: CorrelationId) -> List[ResidualRecord]:
    """residual_i = q_cr_i - heat_balance_chf(corr, op_i)."""

    corr = CorrelationId(corr)
    residuals: List[ResidualRecord] = []
    for index, record in enumerate(records):
        try:
            base = heat_balance_chf(corr, record.op)
        except ChfError as exc:
            raise ResidualError(index, exc) from exc
        residuals.append(
            ResidualRecord(op=record.op, residual=record.q_cr - base, base=corr, base_prediction=base)
        )
    return residuals
