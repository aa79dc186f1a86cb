"""Z-score standardization fitted on the training partition only."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import DegenerateFeature, TooFewRecords
from ..types import FEATURE_NAMES, ChfRecord, OperatingPoint


def feature_matrix(items: Sequence[ChfRecord | OperatingPoint]) -> np.ndarray:
    """n x 5 matrix of (d_he, L, P, G, dh_sub_in) in OperatingPoint units."""

    rows = [(item.op if isinstance(item, ChfRecord) else item).as_features() for item in items]
    return np.asarray(rows, dtype=np.float64).reshape(len(rows), len(FEATURE_NAMES))


@dataclass(frozen=True)
class StandardizationStats:
    """Per-feature and target mean / standard deviation (population)."""

    feature_mean: Tuple[float, ...]
    feature_std: Tuple[float, ...]
    target_mean: float
    target_std: float

    def __post_init__(self) -> None:
        if len(self.feature_mean) != len(FEATURE_NAMES) or len(self.feature_std) != len(FEATURE_NAMES):
            raise ValueError(
                f"expected {len(FEATURE_NAMES)} feature statistics, got "
                f"{len(self.feature_mean)} means and {len(self.feature_std)} deviations"
            )
        if min(self.feature_std) <= 0 or self.target_std <= 0:
            raise ValueError("standard deviations must be positive")

    def apply(self, features: np.ndarray) -> np.ndarray:
        return (np.asarray(features, dtype=np.float64) - np.asarray(self.feature_mean)) / np.asarray(
            self.feature_std
        )

    def invert(self, z: np.ndarray) -> np.ndarray:
        return np.asarray(z, dtype=np.float64) * np.asarray(self.feature_std) + np.asarray(self.feature_mean)

    def apply_target(self, values: np.ndarray | float) -> np.ndarray:
        return (np.asarray(values, dtype=np.float64) - self.target_mean) / self.target_std

    def invert_target(self, z: np.ndarray | float) -> np.ndarray:
        return np.asarray(z, dtype=np.float64) * self.target_std + self.target_mean


def fit_standardizer(
    train: Sequence[ChfRecord], targets: Optional[Sequence[float]] = None
) -> StandardizationStats:
    """Fit feature and target statistics; targets default to the measured CHF."""

    if len(train) < 2:
        raise TooFewRecords(2, len(train))
    features = feature_matrix(train)
    target = np.asarray([record.q_cr for record in train] if targets is None else targets, dtype=np.float64)
    if target.shape != (len(train),):
        raise ValueError(f"expected {len(train)} targets, got shape {target.shape}")
    mean = features.mean(axis=0)
    std = features.std(axis=0)
    for name, spread in zip(FEATURE_NAMES, std):
        if not spread > 0:
            raise DegenerateFeature(name)
    target_std = float(target.std())
    if not target_std > 0:
        raise DegenerateFeature("target")
    return StandardizationStats(
        feature_mean=tuple(float(v) for v in mean),
        feature_std=tuple(float(v) for v in std),
        target_mean=float(target.mean()),
        target_std=target_std,
    )
