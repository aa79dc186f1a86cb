"""Error metrics, parity export and training-coverage diagnostics."""

from .hull import Hull2, convex_hull, hull5d_contains, hull_and_containment
from .metrics import metrics, metrics_by_source
from .parity import parity_export, read_parity
from .pca import Pca2, pca_fit
from .serialization import format_report, serialize_evaluation, serialize_report

__all__ = [
    "Hull2",
    "Pca2",
    "convex_hull",
    "format_report",
    "hull5d_contains",
    "hull_and_containment",
    "metrics",
    "metrics_by_source",
    "parity_export",
    "pca_fit",
    "read_parity",
    "serialize_evaluation",
    "serialize_report",
]
