"""Plot-ready parity data (gnuplot compatible: data block, then an identity-line block)."""

from __future__ import annotations

import io
import logging
from pathlib import Path
from typing import List, Union

import pandas as pd

from ..errors import IoError, ParseError
from ..types import EvalReport, ParityRow

logger = logging.getLogger(__name__)

PARITY_COLUMNS = ["experimental_kw_m2", "predicted_kw_m2", "rel_error_pct", "model"]
IDENTITY_MARKER = "# identity"

PathLike = Union[str, Path]


def parity_text(report: EvalReport) -> str:
    frame = pd.DataFrame(
        [(row.experimental, row.predicted, row.rel_error_pct, row.model) for row in report.parity],
        columns=PARITY_COLUMNS,
    )
    text = frame.to_csv(index=False, lineterminator="\n")
    if report.parity:
        values = [row.experimental for row in report.parity] + [row.predicted for row in report.parity]
        low, high = min(values), max(values)
        text += f"\n\n{IDENTITY_MARKER}\n{low!r},{low!r}\n{high!r},{high!r}\n"
    return text


def parity_export(report: EvalReport, path: PathLike) -> None:
    try:
        Path(path).write_text(parity_text(report), encoding="utf-8")
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc
    logger.info("Wrote %d parity rows to %s", len(report.parity), path)


def read_parity(path: PathLike) -> List[ParityRow]:
    """Parse the data block of a parity file."""

    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"parity file is not valid UTF-8: {exc.reason}") from exc
    data_block = text.split("\n\n", 1)[0] + "\n"
    frame = pd.read_csv(
        io.StringIO(data_block),
        dtype={"model": str},
        keep_default_na=False,
        float_precision="round_trip",
    )
    if list(frame.columns) != PARITY_COLUMNS:
        raise ParseError(f"unexpected parity header {list(frame.columns)!r}")
    return [
        ParityRow(
            experimental=float(row.experimental_kw_m2),
            predicted=float(row.predicted_kw_m2),
            rel_error_pct=float(row.rel_error_pct),
            model=row.model,
        )
        for row in frame.itertuples(index=False)
    ]
