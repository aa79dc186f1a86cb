import numpy as np
import pytest

from chfkit.dataset import (
    SplitIndices,
    feature_matrix,
    fit_standardizer,
    load_split,
    partition_sizes,
    save_split,
    split,
)
from chfkit.errors import DegenerateFeature, IndexOutOfRange, TooFewRecords
from chfkit.types import ChfRecord, OperatingPoint


@pytest.mark.parametrize(
    "n, expected",
    [(577, (519, 29, 29)), (100, (90, 5, 5)), (20, (18, 1, 1)), (29, (27, 1, 1)), (30, (26, 2, 2))],
)
def test_partition_sizes(n, expected):
    assert partition_sizes(n) == expected


def test_split_sizes_and_partition_of_indices(synthetic_577):
    dataset = split(synthetic_577, seed=11)
    assert dataset.sizes == (519, 29, 29)
    all_indices = dataset.train_indices + dataset.validation_indices + dataset.test_indices
    assert sorted(all_indices) == list(range(577))
    assert dataset.train == [synthetic_577[i] for i in dataset.train_indices]


def test_split_is_deterministic_per_seed(synthetic_577):
    first = split(synthetic_577, seed=5)
    second = split(synthetic_577, seed=5)
    other = split(synthetic_577, seed=6)
    assert first.test_indices == second.test_indices
    assert first.train_indices == second.train_indices
    assert first.test_indices != other.test_indices


def test_split_needs_twenty_records(synthetic_small):
    with pytest.raises(TooFewRecords):
        split(synthetic_small[:19], seed=0)


def test_split_indices_persist(tmp_path, synthetic_small):
    indices = SplitIndices.from_split(split(synthetic_small, seed=2))
    path = tmp_path / "split.json"
    save_split(indices, path)
    assert load_split(path) == indices
    assert indices.select(synthetic_small, "test") == split(synthetic_small, seed=2).test


def test_split_indices_reject_foreign_dataset(synthetic_small):
    indices = SplitIndices.from_split(split(synthetic_small, seed=2))
    with pytest.raises(IndexOutOfRange):
        indices.select(synthetic_small[:20], "train")


def test_standardized_training_features_have_zero_mean_unit_spread(synthetic_577):
    dataset = split(synthetic_577, seed=1)
    stats = fit_standardizer(dataset.train)
    z = stats.apply(feature_matrix(dataset.train))
    np.testing.assert_allclose(z.mean(axis=0), 0.0, atol=1e-12)
    np.testing.assert_allclose(z.std(axis=0), 1.0, rtol=1e-12)

    targets = stats.apply_target([record.q_cr for record in dataset.train])
    assert abs(float(targets.mean())) < 1e-12
    assert float(targets.std()) == pytest.approx(1.0, rel=1e-12)


def test_standardization_inverts(synthetic_small):
    stats = fit_standardizer(synthetic_small)
    x = feature_matrix(synthetic_small)
    np.testing.assert_allclose(stats.invert(stats.apply(x)), x, rtol=1e-12)
    q = np.array([record.q_cr for record in synthetic_small])
    np.testing.assert_allclose(stats.invert_target(stats.apply_target(q)), q, rtol=1e-12)


def test_statistics_come_from_training_partition_only(synthetic_577):
    dataset = split(synthetic_577, seed=3)
    from_train = fit_standardizer(dataset.train)
    assert from_train.feature_mean == tuple(feature_matrix(dataset.train).mean(axis=0).tolist())
    assert from_train != fit_standardizer(synthetic_577)


def test_explicit_targets_replace_measurements(synthetic_small):
    residuals = [record.q_cr - 1000.0 for record in synthetic_small]
    stats = fit_standardizer(synthetic_small, residuals)
    plain = fit_standardizer(synthetic_small)
    assert stats.target_mean == pytest.approx(plain.target_mean - 1000.0, rel=1e-12)
    assert stats.target_std == pytest.approx(plain.target_std, rel=1e-12)
    assert stats.feature_mean == plain.feature_mean


def test_constant_feature_is_degenerate():
    records = [
        ChfRecord(op=OperatingPoint(0.02, 2.0, 7.0, 1000.0 + 100.0 * i, 100.0 + i), q_cr=1500.0 + 10.0 * i)
        for i in range(5)
    ]
    with pytest.raises(DegenerateFeature) as excinfo:
        fit_standardizer(records)
    assert excinfo.value.feature == "d_he"
