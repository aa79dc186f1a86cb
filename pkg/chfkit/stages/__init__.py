"""Training pipeline stages executed by the orchestrator."""

from .base import BaseStage, PipelineState
from .bundle_stage import BundleStage
from .residual_stage import ResidualStage
from .split_stage import SplitStage
from .standardize_stage import StandardizeStage
from .train_stage import TrainStage

__all__ = [
    "BaseStage",
    "BundleStage",
    "PipelineState",
    "ResidualStage",
    "SplitStage",
    "StandardizeStage",
    "TrainStage",
]
