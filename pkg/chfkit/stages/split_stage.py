"""Stage that partitions the records into train / validation / test."""

from __future__ import annotations

from ..dataset.split import split
from .base import BaseStage, PipelineState


class SplitStage(BaseStage):
    def __init__(self) -> None:
        super().__init__(name="split")

    def run(self, state: PipelineState) -> PipelineState:
        state.split = split(state.records, state.seed)
        n_train, n_val, n_test = state.split.sizes
        self.logger.info("Partitioned %d records: %d train / %d validation / %d test", len(state.records), n_train, n_val, n_test)
        return state
