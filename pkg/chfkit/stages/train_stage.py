"""Stage that initializes and trains the network."""

from __future__ import annotations

from ..net.network import Architecture, init
from ..net.training import Trainer
from .base import BaseStage, PipelineState


class TrainStage(BaseStage):
    def __init__(self, architecture: Architecture | None = None, trainer_cls: type[Trainer] = Trainer) -> None:
        super().__init__(name="train")
        self.architecture = architecture or Architecture()
        self.trainer_cls = trainer_cls

    def run(self, state: PipelineState) -> PipelineState:
        parts = state.partitions
        if not parts:
            raise RuntimeError("pipeline state has no standardized partitions yet; run the producing stage first")
        net = init(self.architecture, state.seed)
        trainer = self.trainer_cls(state.train_config)
        best, history = trainer.fit(
            net,
            parts["train"]["x"],
            parts["train"]["y"],
            parts["validation"]["x"],
            parts["validation"]["y"],
        )
        state.network = best
        state.history = history
        self.logger.info(
            "Trained %d epochs; best epoch %d with validation loss %.6g",
            history.epochs_run,
            history.best_epoch,
            history.best_val_loss,
        )
        return state
