"""Deployable CHF predictors: base correlations, pure ML and hybrid models."""

from .base import ChfModel
from .bundle import dumps, load, loads, save
from .correlation import CorrelationModel
from .hybrid import BundleMetadata, BundleModel, ModelBundle, network_output, predict

__all__ = [
    "BundleMetadata",
    "BundleModel",
    "ChfModel",
    "CorrelationModel",
    "ModelBundle",
    "dumps",
    "load",
    "loads",
    "network_output",
    "predict",
    "save",
]
