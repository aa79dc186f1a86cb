"""From-scratch feedforward regressor and its training protocol."""

from .network import Architecture, Network, forward, init, loss_and_grad, predict_batch
from .optim import Adam, EarlyStopping, ExponentialDecay
from .training import TrainConfig, Trainer, TrainHistory, history_frame, train, write_history

__all__ = [
    "Adam",
    "Architecture",
    "EarlyStopping",
    "ExponentialDecay",
    "Network",
    "TrainConfig",
    "TrainHistory",
    "Trainer",
    "forward",
    "history_frame",
    "init",
    "loss_and_grad",
    "predict_batch",
    "train",
    "write_history",
]
