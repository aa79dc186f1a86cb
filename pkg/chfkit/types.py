"""Core data models and enumerations for annulus CHF prediction."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from .errors import InvalidGeometry

FEATURE_NAMES: Tuple[str, ...] = ("d_he", "length", "pressure", "mass_flux", "dh_sub_in")


class CorrelationId(str, Enum):
    """Empirical base correlations available to the heat-balance solver."""

    BIASI = "biasi"
    BOWRING = "bowring"
    KATTO = "katto"


class ModelKind(str, Enum):
    """Deployable ML model variants."""

    PURE = "pure"
    HYBRID_BIASI = "hybrid-biasi"
    HYBRID_BOWRING = "hybrid-bowring"
    HYBRID_KATTO = "hybrid-katto"

    @property
    def base(self) -> Optional[CorrelationId]:
        """Base correlation corrected by the residual network, ``None`` for pure ML."""

        return {
            ModelKind.PURE: None,
            ModelKind.HYBRID_BIASI: CorrelationId.BIASI,
            ModelKind.HYBRID_BOWRING: CorrelationId.BOWRING,
            ModelKind.HYBRID_KATTO: CorrelationId.KATTO,
        }[self]

    @property
    def is_hybrid(self) -> bool:
        return self.base is not None


@dataclass(frozen=True)
class SatProps:
    """Saturation-line water properties at one pressure."""

    p: float  # MPa
    h_f: float  # kJ/kg
    h_fg: float  # kJ/kg
    rho_f: float  # kg/m3
    rho_g: float  # kg/m3
    sigma: float  # N/m


@dataclass(frozen=True)
class AnnulusGeometry:
    """Concentric annulus heated on the inner wall only."""

    d_i: float  # m, heated inner wall
    d_o: float  # m, unheated outer wall

    def __post_init__(self) -> None:
        if not (math.isfinite(self.d_i) and math.isfinite(self.d_o)) or self.d_i <= 0 or self.d_o <= self.d_i:
            raise InvalidGeometry(self.d_o, self.d_i)

    @property
    def flow_area(self) -> float:
        return math.pi * (self.d_o**2 - self.d_i**2) / 4.0

    @property
    def heated_perimeter(self) -> float:
        return math.pi * self.d_i

    @property
    def d_he(self) -> float:
        """Heated equivalent diameter, (d_o^2 - d_i^2) / d_i."""

        return (self.d_o**2 - self.d_i**2) / self.d_i


@dataclass(frozen=True)
class OperatingPoint:
    """The five model inputs shared by correlations and networks."""

    d_he: float  # m
    length: float  # m
    pressure: float  # MPa
    mass_flux: float  # kg/m2/s
    dh_sub_in: float  # kJ/kg

    def __post_init__(self) -> None:
        values = self.as_features()
        if not all(math.isfinite(value) for value in values):
            raise ValueError(f"operating point fields must be finite: {values}")
        if min(self.d_he, self.length, self.pressure, self.mass_flux) <= 0 or self.dh_sub_in < 0:
            raise ValueError(f"operating point out of domain: {values}")

    def as_features(self) -> Tuple[float, float, float, float, float]:
        return (self.d_he, self.length, self.pressure, self.mass_flux, self.dh_sub_in)


@dataclass(frozen=True)
class ChfRecord:
    """One experimental CHF measurement."""

    op: OperatingPoint
    q_cr: float  # kW/m2
    x_e_cr: Optional[float] = None
    source: str = ""

    def __post_init__(self) -> None:
        if not math.isfinite(self.q_cr) or self.q_cr <= 0:
            raise ValueError(f"measured CHF must be positive, got {self.q_cr!r}")
        if self.x_e_cr is not None and not (-1.0 <= self.x_e_cr < 1.0):
            raise ValueError(f"outlet quality must lie in [-1, 1), got {self.x_e_cr!r}")


@dataclass(frozen=True)
class ResidualRecord:
    """Experimental-minus-base residual used as the hybrid training target."""

    op: OperatingPoint
    residual: float  # kW/m2
    base: CorrelationId
    base_prediction: float  # kW/m2


@dataclass(frozen=True)
class SplitDataset:
    """Seeded train/validation/test partition of a record list."""

    train: List[ChfRecord]
    validation: List[ChfRecord]
    test: List[ChfRecord]
    seed: int
    train_indices: List[int] = field(default_factory=list)
    validation_indices: List[int] = field(default_factory=list)
    test_indices: List[int] = field(default_factory=list)

    @property
    def sizes(self) -> Tuple[int, int, int]:
        return (len(self.train), len(self.validation), len(self.test))


@dataclass(frozen=True)
class EnvelopeFlag:
    """A record field lying outside the compiled-data envelope."""

    index: int
    field: str
    value: float
    low: float
    high: float


@dataclass
class EnvelopeReport:
    """Advisory envelope check over a record list."""

    n_records: int = 0
    flags: List[EnvelopeFlag] = field(default_factory=list)

    @property
    def flagged_indices(self) -> List[int]:
        return sorted({flag.index for flag in self.flags})

    def feature_flags(self) -> List[EnvelopeFlag]:
        return [flag for flag in self.flags if flag.field != "q_cr"]


@dataclass(frozen=True)
class ParityRow:
    experimental: float  # kW/m2
    predicted: float  # kW/m2
    rel_error_pct: float
    model: str = ""


@dataclass
class EvalReport:
    """Error metrics of one model over one set of points."""

    mu_error: float
    max_error: float
    std_error: float
    rrmse: float
    f_gt10: float
    n_points: int
    mae_kw_m2: float = 0.0
    n_abs_gt200: int = 0
    model: str = ""
    parity: List[ParityRow] = field(default_factory=list)
