"""Utilities for transforming evaluation results into JSON-serialisable payloads."""

from __future__ import annotations

from typing import Any, Dict, Mapping, Optional

from ..types import EvalReport


def serialize_report(report: EvalReport, include_parity: bool = False) -> Dict[str, Any]:
    """Convert :class:`EvalReport` into a JSON friendly dictionary."""

    payload: Dict[str, Any] = {
        "model": report.model,
        "nPoints": report.n_points,
        "muError": report.mu_error,
        "maxError": report.max_error,
        "stdError": report.std_error,
        "rrmse": report.rrmse,
        "fGt10": report.f_gt10,
        "maeKwM2": report.mae_kw_m2,
        "nAbsGt200": report.n_abs_gt200,
    }
    if include_parity:
        payload["parity"] = [
            {
                "experimental": row.experimental,
                "predicted": row.predicted,
                "relErrorPct": row.rel_error_pct,
            }
            for row in report.parity
        ]
    return payload


def serialize_evaluation(
    report: EvalReport, by_source: Optional[Mapping[str, EvalReport]] = None
) -> Dict[str, Any]:
    payload = serialize_report(report)
    if by_source:
        payload["bySource"] = {source: serialize_report(item) for source, item in by_source.items()}
    return payload


def format_report(report: EvalReport) -> str:
    """Human-readable metric block, one ``name: value`` per line."""

    lines = [
        f"model: {report.model}",
        f"n_points: {report.n_points}",
        f"mu_error_pct: {report.mu_error:.4f}",
        f"max_error_pct: {report.max_error:.4f}",
        f"std_error_pct: {report.std_error:.4f}",
        f"rrmse_pct: {report.rrmse:.4f}",
        f"f_gt10_pct: {report.f_gt10:.4f}",
        f"mae_kw_m2: {report.mae_kw_m2:.4f}",
        f"n_abs_gt200: {report.n_abs_gt200}",
    ]
    return "\n".join(lines)
