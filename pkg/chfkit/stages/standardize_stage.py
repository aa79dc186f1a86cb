"""Stage that fits z-score statistics on the training partition and applies them."""

from __future__ import annotations

import numpy as np

from ..dataset.standardize import feature_matrix, fit_standardizer
from .base import BaseStage, PipelineState

PARTS = ("train", "validation", "test")


class StandardizeStage(BaseStage):
    def __init__(self) -> None:
        super().__init__(name="standardize")

    def run(self, state: PipelineState) -> PipelineState:
        dataset = state.require("split")
        targets: np.ndarray = state.require("targets")
        index_lists = {
            "train": dataset.train_indices,
            "validation": dataset.validation_indices,
            "test": dataset.test_indices,
        }
        records = {"train": dataset.train, "validation": dataset.validation, "test": dataset.test}

        stats = fit_standardizer(dataset.train, targets[index_lists["train"]])
        state.stats = stats
        state.partitions = {
            part: {
                "x": stats.apply(feature_matrix(records[part])),
                "y": stats.apply_target(targets[index_lists[part]]),
            }
            for part in PARTS
        }
        self.logger.info("Target mean %.4g, std %.4g (training partition)", stats.target_mean, stats.target_std)
        return state
