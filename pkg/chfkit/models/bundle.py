"""Self-describing JSON container for trained models.

Every float is written with ``float.hex()`` so that a load reproduces the saved
parameters bit for bit. Weight matrices are stored row-major with explicit
``rows``/``cols``.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from ..dataset.standardize import StandardizationStats
from ..errors import FormatError, IoError, VersionError
from ..net.network import Architecture, Network
from ..types import FEATURE_NAMES, ModelKind
from .hybrid import BundleMetadata, ModelBundle

logger = logging.getLogger(__name__)

FORMAT_NAME = "chfkit-bundle"
FORMAT_VERSION = 1

PathLike = Union[str, Path]


def _hex_list(values: Sequence[float]) -> List[str]:
    return [float(value).hex() for value in values]


def bundle_to_dict(bundle: ModelBundle) -> Dict[str, Any]:
    arch = bundle.network.architecture
    layers = [
        {
            "rows": int(weight.shape[0]),
            "cols": int(weight.shape[1]),
            "weights": _hex_list(weight.ravel(order="C")),
            "bias": _hex_list(bias),
        }
        for weight, bias in zip(bundle.network.weights, bundle.network.biases)
    ]
    stats = bundle.stats
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "kind": ModelKind(bundle.kind).value,
        "architecture": {
            "inputDim": arch.input_dim,
            "hidden": list(arch.hidden),
            "outputDim": arch.output_dim,
            "activation": arch.activation,
        },
        "layers": layers,
        "stats": {
            "featureNames": list(FEATURE_NAMES),
            "featureMean": _hex_list(stats.feature_mean),
            "featureStd": _hex_list(stats.feature_std),
            "targetMean": float(stats.target_mean).hex(),
            "targetStd": float(stats.target_std).hex(),
        },
        "metadata": {
            "seed": bundle.metadata.seed,
            "trainConfig": dict(bundle.metadata.train_config),
            "datasetFingerprint": bundle.metadata.dataset_fingerprint,
        },
    }


def dumps(bundle: ModelBundle) -> str:
    return json.dumps(bundle_to_dict(bundle), indent=2) + "\n"


def save(bundle: ModelBundle, path: PathLike) -> None:
    try:
        Path(path).write_text(dumps(bundle), encoding="utf-8")
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc
    logger.info("Saved %s bundle to %s", ModelKind(bundle.kind).value, path)


def _field(document: Dict[str, Any], key: str, where: str) -> Any:
    if not isinstance(document, dict) or key not in document:
        raise FormatError(f"{where}{key}", "missing")
    return document[key]


def _hex_value(raw: Any, name: str) -> float:
    if not isinstance(raw, str):
        raise FormatError(name, f"expected a hex float string, got {raw!r}")
    try:
        return float.fromhex(raw)
    except ValueError as exc:
        raise FormatError(name, f"invalid hex float {raw!r}") from exc


def _hex_array(raw: Any, name: str, length: int) -> np.ndarray:
    if not isinstance(raw, list):
        raise FormatError(name, "expected a list")
    if len(raw) != length:
        raise FormatError(name, f"expected {length} values, got {len(raw)}")
    return np.array([_hex_value(item, name) for item in raw], dtype=np.float64)


def _int_value(raw: Any, name: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise FormatError(name, f"expected an integer, got {raw!r}")
    return raw


def bundle_from_dict(document: Any) -> ModelBundle:
    if not isinstance(document, dict):
        raise FormatError("document", "top level must be a JSON object")
    if _field(document, "format", "") != FORMAT_NAME:
        raise FormatError("format", f"expected {FORMAT_NAME!r}, got {document['format']!r}")
    version = _field(document, "version", "")
    if version != FORMAT_VERSION:
        raise VersionError(version, FORMAT_VERSION)

    try:
        kind = ModelKind(_field(document, "kind", ""))
    except ValueError as exc:
        raise FormatError("kind", f"unknown model kind {document['kind']!r}") from exc

    arch_doc = _field(document, "architecture", "")
    hidden = _field(arch_doc, "hidden", "architecture.")
    if not isinstance(hidden, list):
        raise FormatError("architecture.hidden", "expected a list")
    try:
        architecture = Architecture(
            input_dim=_int_value(_field(arch_doc, "inputDim", "architecture."), "architecture.inputDim"),
            hidden=tuple(_int_value(width, "architecture.hidden") for width in hidden),
            output_dim=_int_value(_field(arch_doc, "outputDim", "architecture."), "architecture.outputDim"),
            activation=str(_field(arch_doc, "activation", "architecture.")),
        )
    except ValueError as exc:
        raise FormatError("architecture", str(exc)) from exc
    if architecture.input_dim != len(FEATURE_NAMES):
        raise FormatError("architecture.inputDim", f"expected {len(FEATURE_NAMES)}, got {architecture.input_dim}")
    if architecture.output_dim != 1:
        raise FormatError("architecture.outputDim", f"expected 1, got {architecture.output_dim}")

    layer_docs = _field(document, "layers", "")
    shapes = architecture.shapes
    if not isinstance(layer_docs, list) or len(layer_docs) != len(shapes):
        raise FormatError("layers", f"expected {len(shapes)} layers")
    weights: List[np.ndarray] = []
    biases: List[np.ndarray] = []
    for index, (layer, (fan_in, fan_out)) in enumerate(zip(layer_docs, shapes)):
        where = f"layers[{index}]."
        rows = _int_value(_field(layer, "rows", where), where + "rows")
        cols = _int_value(_field(layer, "cols", where), where + "cols")
        if (rows, cols) != (fan_in, fan_out):
            raise FormatError(where + "rows", f"shape {rows}x{cols} does not match architecture {fan_in}x{fan_out}")
        flat = _hex_array(_field(layer, "weights", where), where + "weights", rows * cols)
        weights.append(flat.reshape(rows, cols))
        biases.append(_hex_array(_field(layer, "bias", where), where + "bias", cols))

    stats_doc = _field(document, "stats", "")
    n_features = len(FEATURE_NAMES)
    names = _field(stats_doc, "featureNames", "stats.")
    if names != list(FEATURE_NAMES):
        raise FormatError("stats.featureNames", f"expected {list(FEATURE_NAMES)}, got {names!r}")
    try:
        stats = StandardizationStats(
            feature_mean=tuple(_hex_array(_field(stats_doc, "featureMean", "stats."), "stats.featureMean", n_features)),
            feature_std=tuple(_hex_array(_field(stats_doc, "featureStd", "stats."), "stats.featureStd", n_features)),
            target_mean=_hex_value(_field(stats_doc, "targetMean", "stats."), "stats.targetMean"),
            target_std=_hex_value(_field(stats_doc, "targetStd", "stats."), "stats.targetStd"),
        )
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError("stats", str(exc)) from exc

    meta_doc = _field(document, "metadata", "")
    train_config = _field(meta_doc, "trainConfig", "metadata.")
    if not isinstance(train_config, dict):
        raise FormatError("metadata.trainConfig", "expected an object")
    metadata = BundleMetadata(
        seed=_int_value(_field(meta_doc, "seed", "metadata."), "metadata.seed"),
        train_config=train_config,
        dataset_fingerprint=str(_field(meta_doc, "datasetFingerprint", "metadata.")),
    )

    network = Network(architecture=architecture, weights=weights, biases=biases)
    for param in network.parameters():
        param.setflags(write=False)
    try:
        return ModelBundle(kind=kind, network=network, stats=stats, metadata=metadata)
    except ValueError as exc:
        raise FormatError("architecture", str(exc)) from exc


def loads(text: str) -> ModelBundle:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("document", f"not valid JSON ({exc.msg} at line {exc.lineno})") from exc
    return bundle_from_dict(document)


def load(path: PathLike) -> ModelBundle:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc
    except UnicodeDecodeError as exc:
        raise FormatError("document", f"not valid UTF-8 ({exc.reason})") from exc
    bundle = loads(text)
    logger.info("Loaded %s bundle from %s", bundle.kind.value, path)
    return bundle
