"""Pure and hybrid (residual-corrected) ML models."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from ..correlations.heat_balance import heat_balance_chf
from ..dataset.standardize import StandardizationStats
from ..errors import NonFinitePrediction
from ..net.network import Network, forward
from ..types import FEATURE_NAMES, ModelKind, OperatingPoint
from .base import ChfModel


@dataclass(frozen=True)
class BundleMetadata:
    seed: int = 0
    train_config: Dict[str, Any] = field(default_factory=dict)
    dataset_fingerprint: str = ""


@dataclass(frozen=True)
class ModelBundle:
    """A trained network with everything needed to turn it into CHF predictions."""

    kind: ModelKind
    network: Network
    stats: StandardizationStats
    metadata: BundleMetadata = field(default_factory=BundleMetadata)

    def __post_init__(self) -> None:
        arch = self.network.architecture
        if arch.input_dim != len(FEATURE_NAMES) or arch.output_dim != 1:
            raise ValueError(f"bundle network must map {len(FEATURE_NAMES)} -> 1, got {arch.input_dim} -> {arch.output_dim}")
        if len(self.stats.feature_mean) != len(FEATURE_NAMES):
            raise ValueError(f"bundle stats must cover {len(FEATURE_NAMES)} features")


def network_output(bundle: ModelBundle, op: OperatingPoint) -> float:
    """De-standardized network output (CHF for pure ML, residual for hybrids)."""

    z = bundle.stats.apply(np.asarray(op.as_features()))
    return float(bundle.stats.invert_target(forward(bundle.network, z)))


def predict(bundle: ModelBundle, op: OperatingPoint) -> float:
    """CHF (kW/m2): network output alone, or base correlation plus predicted residual."""

    kind = ModelKind(bundle.kind)
    value = network_output(bundle, op)
    base = kind.base
    if base is not None:
        value = heat_balance_chf(base, op) + value
    if not math.isfinite(value) or value <= 0:
        raise NonFinitePrediction(value, kind.value)
    return value


class BundleModel(ChfModel):
    """Predictor interface over a loaded bundle."""

    def __init__(self, bundle: ModelBundle, name: Optional[str] = None) -> None:
        self.bundle = bundle
        self.name = name or ModelKind(bundle.kind).value

    def predict(self, op: OperatingPoint) -> float:
        return predict(self.bundle, op)
