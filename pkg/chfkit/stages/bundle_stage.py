"""Stage that packages the trained network into a model bundle."""

from __future__ import annotations

from ..dataset.io import fingerprint
from ..models.hybrid import BundleMetadata, ModelBundle
from .base import BaseStage, PipelineState


class BundleStage(BaseStage):
    def __init__(self) -> None:
        super().__init__(name="bundle")

    def run(self, state: PipelineState) -> PipelineState:
        digest = fingerprint(state.records)
        state.bundle = ModelBundle(
            kind=state.kind,
            network=state.require("network"),
            stats=state.require("stats"),
            metadata=BundleMetadata(
                seed=state.seed,
                train_config=state.train_config.to_dict(),
                dataset_fingerprint=digest,
            ),
        )
        state.metadata["datasetFingerprint"] = digest
        self.logger.info("Bundled %s model (dataset %s)", state.kind.value, digest[:12])
        return state
