"""Simple orchestrator that executes pipeline stages sequentially."""

from __future__ import annotations

from typing import Iterable, List, Sequence

from .stages.base import BaseStage, PipelineState


class PipelineOrchestrator:
    def __init__(self, stages: Sequence[BaseStage]) -> None:
        self.stages: List[BaseStage] = list(stages)

    def run(self, state: PipelineState) -> PipelineState:
        for stage in self.stages:
            state = stage(state)
        return state


def build_default_orchestrator(stages: Iterable[BaseStage]) -> PipelineOrchestrator:
    return PipelineOrchestrator(list(stages))
