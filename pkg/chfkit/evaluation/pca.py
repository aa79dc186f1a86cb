"""Two-component PCA of standardized operating points."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy import linalg as LA

from ..errors import DegenerateFeature, TooFewRecords
from ..types import FEATURE_NAMES


@dataclass(frozen=True)
class Pca2:
    mean: np.ndarray  # (n_features,)
    scale: np.ndarray  # (n_features,), population std
    axes: np.ndarray  # (2, n_features), orthonormal rows
    eigenvalues: np.ndarray  # all, descending

    @property
    def explained_variance(self) -> Tuple[float, float]:
        return float(self.eigenvalues[0]), float(self.eigenvalues[1])

    @property
    def explained_ratio(self) -> Tuple[float, float]:
        total = float(self.eigenvalues.sum())
        return float(self.eigenvalues[0]) / total, float(self.eigenvalues[1]) / total

    def project(self, x: np.ndarray) -> np.ndarray:
        """(n, 2) scores of raw feature rows."""

        z = (np.atleast_2d(np.asarray(x, dtype=np.float64)) - self.mean) / self.scale
        return z @ self.axes.T


def pca_fit(x: np.ndarray, feature_names: Tuple[str, ...] = FEATURE_NAMES) -> Pca2:
    """Fit on a training matrix: z-score each column, eigendecompose the covariance.

    Each axis is signed so that its largest-magnitude loading is positive.
    """

    data = np.asarray(x, dtype=np.float64)
    if data.ndim != 2 or data.shape[0] < 3:
        raise TooFewRecords(3, 0 if data.ndim != 2 else data.shape[0])
    mean = data.mean(axis=0)
    scale = data.std(axis=0)
    for index, spread in enumerate(scale):
        if not spread > 0:
            name = feature_names[index] if index < len(feature_names) else f"feature {index}"
            raise DegenerateFeature(name)

    z = (data - mean) / scale
    covariance = z.T @ z / data.shape[0]
    vals, vecs = LA.eigh(covariance)
    order = np.argsort(vals)[::-1]
    vals = vals[order]
    vecs = vecs[:, order]

    axes = vecs[:, :2].T.copy()
    for row in axes:
        if row[np.argmax(np.abs(row))] < 0:
            row *= -1.0
    return Pca2(mean=mean, scale=scale, axes=axes, eigenvalues=vals)
