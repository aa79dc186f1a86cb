"""Fully connected feedforward regressor written directly on numpy arrays.

Layer ``l`` maps ``a @ W[l] + b[l]`` with ``W[l]`` of shape (fan_in, fan_out);
hidden layers apply the activation, the output head is linear.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

import numpy as np

from ..seeding import make_generator

HIDDEN_LAYERS = 7
DEFAULT_WIDTH = 64


def _relu(z: np.ndarray) -> np.ndarray:
    return np.maximum(z, 0.0)


def _relu_grad(z: np.ndarray) -> np.ndarray:
    return np.where(z > 0.0, 1.0, 0.0)


def _tanh_grad(z: np.ndarray) -> np.ndarray:
    return 1.0 - np.tanh(z) ** 2


ACTIVATIONS: Dict[str, Tuple[Callable[[np.ndarray], np.ndarray], Callable[[np.ndarray], np.ndarray]]] = {
    "relu": (_relu, _relu_grad),
    "tanh": (np.tanh, _tanh_grad),
}


@dataclass(frozen=True)
class Architecture:
    input_dim: int = 5
    hidden: Tuple[int, ...] = (DEFAULT_WIDTH,) * HIDDEN_LAYERS
    output_dim: int = 1
    activation: str = "relu"

    def __post_init__(self) -> None:
        object.__setattr__(self, "hidden", tuple(int(width) for width in self.hidden))
        if len(self.hidden) != HIDDEN_LAYERS:
            raise ValueError(f"expected {HIDDEN_LAYERS} hidden layers, got {len(self.hidden)}")
        if min(self.hidden) < 1 or self.input_dim < 1 or self.output_dim < 1:
            raise ValueError(f"layer widths must be >= 1: {self.layer_sizes}")
        if self.activation not in ACTIVATIONS:
            raise ValueError(f"unknown activation {self.activation!r}; choose from {sorted(ACTIVATIONS)}")

    @property
    def layer_sizes(self) -> Tuple[int, ...]:
        return (self.input_dim, *self.hidden, self.output_dim)

    @property
    def shapes(self) -> List[Tuple[int, int]]:
        sizes = self.layer_sizes
        return [(sizes[i], sizes[i + 1]) for i in range(len(sizes) - 1)]


@dataclass
class Network:
    architecture: Architecture
    weights: List[np.ndarray] = field(default_factory=list)
    biases: List[np.ndarray] = field(default_factory=list)

    def __post_init__(self) -> None:
        shapes = self.architecture.shapes
        if len(self.weights) != len(shapes) or len(self.biases) != len(shapes):
            raise ValueError(f"expected {len(shapes)} layers, got {len(self.weights)} weights / {len(self.biases)} biases")
        for index, (shape, weight, bias) in enumerate(zip(shapes, self.weights, self.biases)):
            if weight.shape != shape or bias.shape != (shape[1],):
                raise ValueError(f"layer {index}: weight {weight.shape} / bias {bias.shape} do not match {shape}")

    def parameters(self) -> List[np.ndarray]:
        """Weights and biases interleaved: W0, b0, W1, b1, ..."""

        params: List[np.ndarray] = []
        for weight, bias in zip(self.weights, self.biases):
            params.extend((weight, bias))
        return params

    def copy(self) -> "Network":
        return Network(
            architecture=self.architecture,
            weights=[w.copy() for w in self.weights],
            biases=[b.copy() for b in self.biases],
        )

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(p)) for p in self.parameters())


def init(arch: Architecture, seed: int) -> Network:
    """He-normal weights (std sqrt(2 / fan_in)), output head std sqrt(1 / fan_in), zero biases."""

    rng = make_generator(seed)
    weights: List[np.ndarray] = []
    biases: List[np.ndarray] = []
    shapes = arch.shapes
    for index, (fan_in, fan_out) in enumerate(shapes):
        gain = 1.0 if index == len(shapes) - 1 else 2.0
        weights.append(rng.standard_normal((fan_in, fan_out)) * np.sqrt(gain / fan_in))
        biases.append(np.zeros(fan_out))
    return Network(architecture=arch, weights=weights, biases=biases)


def _forward_cache(net: Network, x: np.ndarray) -> Tuple[np.ndarray, List[np.ndarray], List[np.ndarray]]:
    activation, _ = ACTIVATIONS[net.architecture.activation]
    inputs = [x]
    preacts: List[np.ndarray] = []
    a = x
    last = len(net.weights) - 1
    for index, (weight, bias) in enumerate(zip(net.weights, net.biases)):
        z = a @ weight + bias
        if index == last:
            return z, inputs, preacts
        preacts.append(z)
        a = activation(z)
        inputs.append(a)
    raise AssertionError("network has no layers")


def predict_batch(net: Network, x: np.ndarray) -> np.ndarray:
    """Outputs for an (n, input_dim) batch, shape (n,)."""

    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    out, _, _ = _forward_cache(net, x)
    return out[:, 0]


def forward(net: Network, x: np.ndarray) -> float:
    """Scalar output for one standardized input vector."""

    return float(predict_batch(net, np.asarray(x, dtype=np.float64).reshape(1, -1))[0])


def preactivations(net: Network, x: np.ndarray) -> List[np.ndarray]:
    """Hidden-layer pre-activations for a batch (used to keep gradient checks off ReLU kinks)."""

    _, _, preacts = _forward_cache(net, np.atleast_2d(np.asarray(x, dtype=np.float64)))
    return preacts


def loss_and_grad(net: Network, x: np.ndarray, y: np.ndarray) -> Tuple[float, List[np.ndarray]]:
    """Mean squared error over the batch and its exact gradient, ordered like ``parameters()``."""

    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    if x.shape[0] == 0 or x.shape[0] != y.shape[0]:
        raise ValueError(f"batch needs matching nonempty inputs and targets, got {x.shape[0]} and {y.shape[0]}")
    _, activation_grad = ACTIVATIONS[net.architecture.activation]
    out, inputs, preacts = _forward_cache(net, x)
    error = out[:, 0] - y
    loss = float(np.mean(error**2))

    delta = (2.0 / x.shape[0]) * error.reshape(-1, 1)
    grads: List[np.ndarray] = [np.empty(0)] * (2 * len(net.weights))
    for index in range(len(net.weights) - 1, -1, -1):
        grads[2 * index] = inputs[index].T @ delta
        grads[2 * index + 1] = delta.sum(axis=0)
        if index > 0:
            delta = (delta @ net.weights[index].T) * activation_grad(preacts[index - 1])
    return loss, grads
