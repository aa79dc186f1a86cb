"""Base class for training-pipeline stages and the state they share."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from ..dataset.standardize import StandardizationStats
from ..models.hybrid import ModelBundle
from ..net.network import Network
from ..net.training import TrainConfig, TrainHistory
from ..types import ChfRecord, ModelKind, ResidualRecord, SplitDataset


@dataclass
class PipelineState:
    """Shared state that the training stages fill in, in order."""

    records: List[ChfRecord]
    kind: ModelKind
    seed: int
    train_config: TrainConfig = field(default_factory=TrainConfig)
    split: Optional[SplitDataset] = None
    residuals: List[ResidualRecord] = field(default_factory=list)
    targets: Optional[np.ndarray] = None  # per record, measured CHF or residual
    stats: Optional[StandardizationStats] = None
    partitions: Dict[str, Dict[str, np.ndarray]] = field(default_factory=dict)
    network: Optional[Network] = None
    history: Optional[TrainHistory] = None
    bundle: Optional[ModelBundle] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def require(self, name: str) -> Any:
        value = getattr(self, name)
        if value is None:
            raise RuntimeError(f"pipeline state has no {name!r} yet; run the producing stage first")
        return value


class BaseStage(ABC):
    """Abstract base class for all pipeline stages."""

    def __init__(self, name: str) -> None:
        self.name = name
        self.logger = logging.getLogger(f"chfkit.stages.{name}")

    @abstractmethod
    def run(self, state: PipelineState) -> PipelineState:
        """Execute the stage and mutate the shared state."""

    def __call__(self, state: PipelineState) -> PipelineState:
        self.logger.debug("Running stage %s", self.name)
        return self.run(state)

    def configure_logger(self, level: int = logging.INFO) -> None:
        handler_exists = any(isinstance(h, logging.StreamHandler) for h in self.logger.handlers)
        if not handler_exists:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
            self.logger.addHandler(handler)
            self.logger.propagate = False
        self.logger.setLevel(level)
