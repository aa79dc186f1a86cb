"""Mini-batch training with exponential lr decay and early stopping."""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from ..errors import IoError, NonFiniteLoss
from ..seeding import make_generator
from .network import Network, loss_and_grad, predict_batch
from .optim import Adam, EarlyStopping, ExponentialDecay

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrainConfig:
    max_epochs: int = 500
    patience: int = 25
    lr0: float = 1e-3
    decay: float = 0.96
    batch_size: int = 32
    seed: int = 0
    min_delta: float = 1e-12

    def __post_init__(self) -> None:
        if self.max_epochs < 1:
            raise ValueError(f"max_epochs must be >= 1, got {self.max_epochs}")
        if self.patience < 1:
            raise ValueError(f"patience must be >= 1, got {self.patience}")
        if not 0 < self.decay <= 1:
            raise ValueError(f"decay must lie in (0, 1], got {self.decay}")
        if not self.lr0 > 0:
            raise ValueError(f"lr0 must be positive, got {self.lr0}")
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be >= 1, got {self.batch_size}")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class TrainHistory:
    train_loss: List[float] = field(default_factory=list)
    val_loss: List[float] = field(default_factory=list)
    lr: List[float] = field(default_factory=list)
    stopped_epoch: int = -1
    best_epoch: int = -1

    @property
    def epochs_run(self) -> int:
        return len(self.val_loss)

    @property
    def best_val_loss(self) -> float:
        return self.val_loss[self.best_epoch]


class Trainer:
    """Runs the training protocol for one network."""

    def __init__(self, config: TrainConfig) -> None:
        self.config = config
        self.schedule = ExponentialDecay(config.lr0, config.decay)

    def evaluate(self, net: Network, x: np.ndarray, y: np.ndarray) -> float:
        """Mean squared error of ``net`` over a full partition."""

        return float(np.mean((predict_batch(net, x) - y) ** 2))

    def fit(
        self,
        net: Network,
        x_train: np.ndarray,
        y_train: np.ndarray,
        x_val: np.ndarray,
        y_val: np.ndarray,
    ) -> Tuple[Network, TrainHistory]:
        cfg = self.config
        x_train = np.asarray(x_train, dtype=np.float64)
        y_train = np.asarray(y_train, dtype=np.float64).reshape(-1)
        x_val = np.asarray(x_val, dtype=np.float64)
        y_val = np.asarray(y_val, dtype=np.float64).reshape(-1)
        if len(x_train) == 0 or len(x_val) == 0:
            raise ValueError("training and validation sets must be nonempty")

        working = net.copy()
        params = working.parameters()
        optimizer = Adam(params)
        stopper = EarlyStopping(cfg.patience, cfg.min_delta)
        rng = make_generator(cfg.seed)
        history = TrainHistory()
        best: Optional[Network] = None
        n = len(x_train)

        for epoch in range(cfg.max_epochs):
            lr = self.schedule(epoch)
            order = rng.permutation(n)
            for start in range(0, n, cfg.batch_size):
                batch = order[start : start + cfg.batch_size]
                loss, grads = loss_and_grad(working, x_train[batch], y_train[batch])
                if not math.isfinite(loss):
                    raise NonFiniteLoss(epoch, loss)
                optimizer.step(params, grads, lr)

            train_loss = self.evaluate(working, x_train, y_train)
            val_loss = self.evaluate(working, x_val, y_val)
            if not (math.isfinite(train_loss) and math.isfinite(val_loss)):
                raise NonFiniteLoss(epoch, train_loss if not math.isfinite(train_loss) else val_loss)
            history.train_loss.append(train_loss)
            history.val_loss.append(val_loss)
            history.lr.append(lr)
            history.stopped_epoch = epoch
            logger.debug("epoch %d lr=%.3e train=%.6g val=%.6g", epoch, lr, train_loss, val_loss)

            if stopper.update(val_loss):
                history.best_epoch = epoch
                best = working.copy()
            elif stopper.should_stop:
                logger.info(
                    "Early stop at epoch %d (best epoch %d, val loss %.6g)",
                    epoch,
                    history.best_epoch,
                    stopper.best_loss,
                )
                break

        assert best is not None
        return best, history


def train(
    net: Network,
    train_set: Tuple[np.ndarray, np.ndarray],
    val_set: Tuple[np.ndarray, np.ndarray],
    cfg: TrainConfig,
) -> Tuple[Network, TrainHistory]:
    """Train ``net`` on (x, y) pairs; returns the network from the best validation epoch."""

    return Trainer(cfg).fit(net, train_set[0], train_set[1], val_set[0], val_set[1])


HISTORY_COLUMNS = ["epoch", "train_loss", "val_loss", "lr"]


def history_frame(history: TrainHistory) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "epoch": list(range(history.epochs_run)),
            "train_loss": history.train_loss,
            "val_loss": history.val_loss,
            "lr": history.lr,
        },
        columns=HISTORY_COLUMNS,
    )


def write_history(history: TrainHistory, path: Union[str, Path]) -> None:
    try:
        history_frame(history).to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc
    logger.info("Wrote %d-epoch history to %s", history.epochs_run, path)
