"""Optimizer, learning-rate schedule and early stopping used by the trainer."""

from __future__ import annotations

import math
from typing import List, Sequence

import numpy as np


class Adam:
    """Adam with bias-corrected moments; updates parameter arrays in place."""

    def __init__(
        self,
        params: Sequence[np.ndarray],
        beta1: float = 0.9,
        beta2: float = 0.999,
        eps: float = 1e-8,
    ) -> None:
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.step_count = 0
        self._m: List[np.ndarray] = [np.zeros_like(p) for p in params]
        self._v: List[np.ndarray] = [np.zeros_like(p) for p in params]

    def step(self, params: Sequence[np.ndarray], grads: Sequence[np.ndarray], lr: float) -> None:
        self.step_count += 1
        correction1 = 1.0 - self.beta1**self.step_count
        correction2 = 1.0 - self.beta2**self.step_count
        for param, grad, m, v in zip(params, grads, self._m, self._v):
            m *= self.beta1
            m += (1.0 - self.beta1) * grad
            v *= self.beta2
            v += (1.0 - self.beta2) * grad * grad
            param -= lr * (m / correction1) / (np.sqrt(v / correction2) + self.eps)


class ExponentialDecay:
    """Stepwise per-epoch decay: lr(e) = lr0 * decay**e."""

    def __init__(self, lr0: float, decay: float) -> None:
        self.lr0 = lr0
        self.decay = decay

    def __call__(self, epoch: int) -> float:
        return self.lr0 * self.decay**epoch


class EarlyStopping:
    """Stops once the monitored loss has not improved for ``patience`` epochs.

    An epoch improves when its loss is below the best so far by at least ``min_delta``.
    """

    def __init__(self, patience: int, min_delta: float = 1e-12) -> None:
        self.patience = patience
        self.min_delta = min_delta
        self.best_loss = math.inf
        self.counter = 0

    def update(self, loss: float) -> bool:
        """Record ``loss``; return True if it is a new best."""

        if loss < self.best_loss - self.min_delta:
            self.best_loss = loss
            self.counter = 0
            return True
        self.counter += 1
        return False

    @property
    def should_stop(self) -> bool:
        return self.counter >= self.patience
