"""Relative-error metrics used to compare CHF predictors."""

from __future__ import annotations

import math
from typing import Dict, Sequence

import numpy as np

from ..errors import LengthMismatch, NonpositiveActual
from ..types import ChfRecord, EvalReport, ParityRow

ERROR_THRESHOLD_PCT = 10.0
ABS_ERROR_THRESHOLD_KW_M2 = 200.0


def metrics(preds: Sequence[float], actuals: Sequence[float], model: str = "") -> EvalReport:
    """Summarize predictions against measurements.

    With ``e_i = 100 (pred_i - y_i) / y_i``: ``mu_error`` and ``max_error`` are the
    mean and maximum of ``|e_i|``, ``std_error`` is the sample standard deviation of
    ``|e_i|`` (0 for a single point), ``rrmse`` the root mean square of ``e_i`` and
    ``f_gt10`` the percentage of points with ``|e_i|`` strictly above 10.
    """

    pred = np.asarray(preds, dtype=np.float64).reshape(-1)
    actual = np.asarray(actuals, dtype=np.float64).reshape(-1)
    if pred.shape != actual.shape or pred.size == 0:
        raise LengthMismatch(pred.size, actual.size)
    for index, value in enumerate(actual):
        if not (math.isfinite(value) and value > 0):
            raise NonpositiveActual(index, float(value))

    rel = 100.0 * (pred - actual) / actual
    abs_rel = np.abs(rel)
    abs_err = np.abs(pred - actual)
    n = int(pred.size)
    parity = [
        ParityRow(experimental=float(y), predicted=float(p), rel_error_pct=float(e), model=model)
        for y, p, e in zip(actual, pred, rel)
    ]
    return EvalReport(
        mu_error=float(abs_rel.mean()),
        max_error=float(abs_rel.max()),
        std_error=float(abs_rel.std(ddof=1)) if n > 1 else 0.0,
        rrmse=float(np.sqrt(np.mean(rel**2))),
        f_gt10=100.0 * int(np.count_nonzero(abs_rel > ERROR_THRESHOLD_PCT)) / n,
        n_points=n,
        mae_kw_m2=float(abs_err.mean()),
        n_abs_gt200=int(np.count_nonzero(abs_err > ABS_ERROR_THRESHOLD_KW_M2)),
        model=model,
        parity=parity,
    )


def metrics_by_source(
    preds: Sequence[float], records: Sequence[ChfRecord], model: str = ""
) -> Dict[str, EvalReport]:
    """One report per record ``source`` label, in order of first appearance."""

    if len(preds) != len(records):
        raise LengthMismatch(len(preds), len(records))
    groups: Dict[str, list] = {}
    for pred, record in zip(preds, records):
        groups.setdefault(record.source, []).append((pred, record.q_cr))
    return {
        source: metrics([p for p, _ in pairs], [y for _, y in pairs], model=model)
        for source, pairs in groups.items()
    }
