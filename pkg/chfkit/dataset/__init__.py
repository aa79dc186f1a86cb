"""Experimental record ingestion, validation, partitioning and targets."""

from .io import CSV_COLUMNS, fingerprint, load_csv, write_csv
from .residuals import compute_residuals
from .split import SplitIndices, load_split, partition_sizes, save_split, split
from .standardize import StandardizationStats, feature_matrix, fit_standardizer
from .synth import synth_generate
from .validation import validate_envelope

__all__ = [
    "CSV_COLUMNS",
    "SplitIndices",
    "StandardizationStats",
    "compute_residuals",
    "feature_matrix",
    "fingerprint",
    "fit_standardizer",
    "load_csv",
    "load_split",
    "partition_sizes",
    "save_split",
    "split",
    "synth_generate",
    "validate_envelope",
    "write_csv",
]
