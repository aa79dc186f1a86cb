"""Seeded 90/5/5 train/validation/test partitioning."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from ..errors import DataError, IndexOutOfRange, IoError, TooFewRecords
from ..seeding import make_generator
from ..types import ChfRecord, SplitDataset

logger = logging.getLogger(__name__)

MIN_RECORDS = 20
HOLDOUT_PERCENT = 5


def partition_sizes(n: int) -> Tuple[int, int, int]:
    """(n_train, n_val, n_test) with round-half-up 5 % holdouts."""

    n_holdout = (HOLDOUT_PERCENT * n + 50) // 100
    return n - 2 * n_holdout, n_holdout, n_holdout


def split(records: Sequence[ChfRecord], seed: int) -> SplitDataset:
    """Shuffle with the seeded generator, then cut train | validation | test."""

    n = len(records)
    if n < MIN_RECORDS:
        raise TooFewRecords(MIN_RECORDS, n)
    n_train, n_val, _ = partition_sizes(n)
    order = make_generator(seed).permutation(n).tolist()
    train_idx = order[:n_train]
    val_idx = order[n_train : n_train + n_val]
    test_idx = order[n_train + n_val :]
    logger.info("Split %d records into %d/%d/%d (seed=%d)", n, n_train, n_val, len(test_idx), seed)
    return SplitDataset(
        train=[records[i] for i in train_idx],
        validation=[records[i] for i in val_idx],
        test=[records[i] for i in test_idx],
        seed=seed,
        train_indices=train_idx,
        validation_indices=val_idx,
        test_indices=test_idx,
    )


@dataclass(frozen=True)
class SplitIndices:
    """Persisted partition indices, written by training and read by evaluation."""

    seed: int
    n: int
    train: List[int]
    validation: List[int]
    test: List[int]

    @classmethod
    def from_split(cls, dataset: SplitDataset) -> "SplitIndices":
        return cls(
            seed=dataset.seed,
            n=sum(dataset.sizes),
            train=list(dataset.train_indices),
            validation=list(dataset.validation_indices),
            test=list(dataset.test_indices),
        )

    def select(self, records: Sequence[ChfRecord], part: str = "test") -> List[ChfRecord]:
        indices: List[int] = getattr(self, part)
        for index in indices:
            if not 0 <= index < len(records):
                raise IndexOutOfRange(index, len(records))
        return [records[index] for index in indices]


def save_split(indices: SplitIndices, path: Union[str, Path]) -> None:
    payload = {
        "seed": indices.seed,
        "n": indices.n,
        "train": indices.train,
        "validation": indices.validation,
        "test": indices.test,
    }
    try:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc


def load_split(path: Union[str, Path]) -> SplitIndices:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc
    except UnicodeDecodeError as exc:
        raise DataError(f"split file {path} is not valid UTF-8") from exc
    except json.JSONDecodeError as exc:
        raise DataError(f"split file {path} is not valid JSON") from exc
    try:
        return SplitIndices(
            seed=int(payload["seed"]),
            n=int(payload["n"]),
            train=[int(i) for i in payload["train"]],
            validation=[int(i) for i in payload["validation"]],
            test=[int(i) for i in payload["test"]],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"split file {path} is missing or has malformed fields") from exc
