"""Exception hierarchy shared by the library and the command line interface."""

from __future__ import annotations

from typing import Optional


class ChfError(Exception):
    """Base class for every error raised by chfkit."""

    exit_code = 1


class UsageError(ChfError):
    """Raised when a command is invoked with an inconsistent set of options."""

    exit_code = 2


class DataError(ChfError, ValueError):
    """Input files or in-memory records do not satisfy their contract."""

    exit_code = 3


class NumericError(ChfError, ValueError):
    """A computation was asked for outside of its domain or failed to converge."""

    exit_code = 4


class IoError(ChfError):
    """Reading or writing a file failed."""

    exit_code = 5

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"I/O failure on {path}: {reason}")
        self.path = path
        self.reason = reason


class ParseError(DataError):
    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None) -> None:
        locus = []
        if row is not None:
            locus.append(f"row {row}")
        if column is not None:
            locus.append(f"column {column!r}")
        prefix = f"{', '.join(locus)}: " if locus else ""
        super().__init__(f"{prefix}{message}")
        self.row = row
        self.column = column


class SchemaError(DataError):
    def __init__(self, expected: list[str], found: list[str]) -> None:
        super().__init__(f"header mismatch: expected {','.join(expected)!r}, found {','.join(found)!r}")
        self.expected = expected
        self.found = found


class TooFewRecords(DataError):
    def __init__(self, needed: int, found: int) -> None:
        super().__init__(f"at least {needed} records are required, got {found}")
        self.needed = needed
        self.found = found


class FormatError(DataError):
    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"bundle field {field!r}: {message}")
        self.field = field


class VersionError(DataError):
    def __init__(self, found: object, supported: int) -> None:
        super().__init__(f"unsupported bundle version {found!r} (supported: {supported})")
        self.found = found
        self.supported = supported


class IndexOutOfRange(DataError):
    def __init__(self, index: int, size: int) -> None:
        super().__init__(f"record index {index} out of range for {size} records")
        self.index = index
        self.size = size


class InvalidGeometry(NumericError):
    def __init__(self, d_o: float, d_i: float) -> None:
        super().__init__(f"annulus requires 0 < d_i < d_o, got d_o={d_o!r}, d_i={d_i!r}")
        self.d_o = d_o
        self.d_i = d_i


class PressureOutOfRange(NumericError):
    def __init__(self, pressure: float, low: float, high: float) -> None:
        super().__init__(f"pressure {pressure!r} MPa outside [{low}, {high}] MPa")
        self.pressure = pressure


class DomainError(NumericError):
    """A correlation's internal form is undefined for the given inputs."""


class NoConvergence(NumericError):
    def __init__(self, iterations: int, residual: float) -> None:
        super().__init__(f"bisection did not converge in {iterations} iterations (residual {residual:.3e})")
        self.iterations = iterations
        self.residual = residual


class NoRoot(NumericError):
    def __init__(self, low: float, high: float) -> None:
        super().__init__(f"heat balance has no sign change on [{low}, {high}] kW/m2")
        self.low = low
        self.high = high


class DegenerateFeature(NumericError):
    def __init__(self, feature: str) -> None:
        super().__init__(f"feature {feature!r} has zero spread in the fitting data")
        self.feature = feature


class DegenerateHull(NumericError):
    """Training projections are collinear (or too few) to span a 2-D hull."""


class NonFiniteLoss(NumericError):
    def __init__(self, epoch: int, loss: float) -> None:
        super().__init__(f"non-finite loss {loss!r} at epoch {epoch}")
        self.epoch = epoch
        self.loss = loss


class NonFinitePrediction(NumericError):
    def __init__(self, value: float, kind: str) -> None:
        super().__init__(f"{kind} produced an invalid CHF prediction {value!r} kW/m2")
        self.value = value
        self.kind = kind


class LengthMismatch(NumericError):
    def __init__(self, n_preds: int, n_actuals: int) -> None:
        super().__init__(f"{n_preds} predictions vs {n_actuals} measurements")


class NonpositiveActual(NumericError):
    def __init__(self, index: int, value: float) -> None:
        super().__init__(f"measured CHF at position {index} must be positive, got {value!r}")
        self.index = index


class ResidualError(NumericError):
    """Wraps a correlation failure with the index of the offending record."""

    def __init__(self, index: int, cause: ChfError) -> None:
        super().__init__(f"record {index}: {cause}")
        self.index = index
        self.cause = cause
        self.exit_code = cause.exit_code
