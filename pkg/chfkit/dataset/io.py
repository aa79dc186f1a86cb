"""CSV ingestion and export of experimental CHF records."""

from __future__ import annotations

import hashlib
import logging
import math
from pathlib import Path
from typing import Iterable, List, Optional, Union

import pandas as pd

from ..errors import IoError, ParseError, SchemaError
from ..types import ChfRecord, OperatingPoint

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "dhe_mm",
    "length_m",
    "pressure_mpa",
    "mass_flux_kg_m2_s",
    "dh_sub_in_kj_kg",
    "x_e_cr",
    "q_cr_kw_m2",
    "source",
]
_NUMERIC_COLUMNS = CSV_COLUMNS[:5] + ["q_cr_kw_m2"]

PathLike = Union[str, Path]


def _parse_float(raw: str, row: int, column: str) -> float:
    try:
        value = float(raw)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"not a number: {raw!r}", row=row, column=column) from exc
    if not math.isfinite(value):
        raise ParseError(f"non-finite value {raw!r}", row=row, column=column)
    return value


def record_from_row(row: dict, row_number: int) -> ChfRecord:
    """Build a record from one CSV row of strings (file units)."""

    values = {column: _parse_float(row[column], row_number, column) for column in _NUMERIC_COLUMNS}
    x_raw = str(row["x_e_cr"]).strip()
    x_e_cr: Optional[float] = _parse_float(x_raw, row_number, "x_e_cr") if x_raw else None
    try:
        op = OperatingPoint(
            d_he=values["dhe_mm"] / 1000.0,
            length=values["length_m"],
            pressure=values["pressure_mpa"],
            mass_flux=values["mass_flux_kg_m2_s"],
            dh_sub_in=values["dh_sub_in_kj_kg"],
        )
    except ValueError as exc:
        raise ParseError(str(exc), row=row_number) from exc
    if values["q_cr_kw_m2"] <= 0:
        raise ParseError(f"q_cr must be positive, got {values['q_cr_kw_m2']!r}", row=row_number, column="q_cr_kw_m2")
    try:
        return ChfRecord(op=op, q_cr=values["q_cr_kw_m2"], x_e_cr=x_e_cr, source=str(row["source"]).strip())
    except ValueError as exc:
        raise ParseError(str(exc), row=row_number, column="x_e_cr") from exc


def load_csv(path: PathLike) -> List[ChfRecord]:
    """Load records from a schema-conformant CSV (rows numbered from 1 after the header)."""

    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8", skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise SchemaError(CSV_COLUMNS, [])
    except pd.errors.ParserError as exc:
        raise ParseError(f"malformed CSV: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"file is not valid UTF-8: {exc.reason} at byte {exc.start}") from exc
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc

    found = [str(column).strip() for column in frame.columns]
    if found != CSV_COLUMNS:
        raise SchemaError(CSV_COLUMNS, found)

    records = [record_from_row(row, index + 1) for index, row in enumerate(frame.to_dict("records"))]
    logger.info("Loaded %d records from %s", len(records), path)
    return records


def records_to_frame(records: Iterable[ChfRecord]) -> pd.DataFrame:
    rows = [
        {
            "dhe_mm": record.op.d_he * 1000.0,
            "length_m": record.op.length,
            "pressure_mpa": record.op.pressure,
            "mass_flux_kg_m2_s": record.op.mass_flux,
            "dh_sub_in_kj_kg": record.op.dh_sub_in,
            "x_e_cr": "" if record.x_e_cr is None else repr(record.x_e_cr),
            "q_cr_kw_m2": record.q_cr,
            "source": record.source,
        }
        for record in records
    ]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def write_csv(records: Iterable[ChfRecord], path: PathLike) -> None:
    frame = records_to_frame(records)
    try:
        frame.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc
    logger.info("Wrote %d records to %s", len(frame), path)


def fingerprint(records: Iterable[ChfRecord]) -> str:
    """SHA-256 over the exact (hex-float) values of every record, in order."""

    digest = hashlib.sha256()
    for record in records:
        fields = [value.hex() for value in (*record.op.as_features(), record.q_cr)]
        fields.append("" if record.x_e_cr is None else record.x_e_cr.hex())
        fields.append(record.source)
        digest.update((",".join(fields) + "\n").encode("utf-8"))
    return digest.hexdigest()
