"""Interface shared by every CHF predictor."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import List, Sequence

from ..types import OperatingPoint


class ChfModel(ABC):
    """Anything that maps an operating point to a CHF in kW/m2."""

    name: str = "model"

    @abstractmethod
    def predict(self, op: OperatingPoint) -> float:
        """Predict CHF (kW/m2) at ``op``."""

    def predict_many(self, ops: Sequence[OperatingPoint]) -> List[float]:
        return [self.predict(op) for op in ops]
