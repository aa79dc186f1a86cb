"""Configuration utilities for building the training pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .dataset.synth import DEFAULT_BIAS_AMPLITUDE, DEFAULT_NOISE
from .net.network import DEFAULT_WIDTH, HIDDEN_LAYERS, Architecture
from .net.training import TrainConfig, Trainer
from .seeding import DEFAULT_SEED
from .stages import BundleStage, ResidualStage, SplitStage, StandardizeStage, TrainStage
from .stages.base import BaseStage
from .types import CorrelationId, ModelKind


@dataclass
class SystemConfig:
    seed: int = DEFAULT_SEED
    train: TrainConfig = field(default_factory=TrainConfig)
    hidden: Tuple[int, ...] = (DEFAULT_WIDTH,) * HIDDEN_LAYERS
    activation: str = "relu"
    synth_bias_amplitude: float = DEFAULT_BIAS_AMPLITUDE
    synth_noise: float = DEFAULT_NOISE

    @property
    def architecture(self) -> Architecture:
        return Architecture(hidden=self.hidden, activation=self.activation)

    def train_config(self, seed: int, overrides: Optional[Dict[str, Any]] = None) -> TrainConfig:
        """Defaults with CLI overrides applied; ``None`` overrides are ignored."""

        values = {key: value for key, value in (overrides or {}).items() if value is not None}
        return replace(self.train, seed=seed, **values)

    def create_stages(self, kind: ModelKind, trainer_cls: type[Trainer] = Trainer) -> List[BaseStage]:
        """Stages for one training run; the residual stage targets ``kind``'s base correlation."""

        return [
            SplitStage(),
            ResidualStage(base=ModelKind(kind).base),
            StandardizeStage(),
            TrainStage(architecture=self.architecture, trainer_cls=trainer_cls),
            BundleStage(),
        ]


@dataclass
class RunConfig:
    """One resolved command-line invocation."""

    command: str
    seed: int = DEFAULT_SEED
    data: Optional[Path] = None
    bundle: Optional[Path] = None
    out: Optional[Path] = None
    split: Optional[Path] = None
    kind: Optional[ModelKind] = None
    corr: Optional[CorrelationId] = None
    overrides: Dict[str, Any] = field(default_factory=dict)
