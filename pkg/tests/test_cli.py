import json

import numpy as np
import pandas as pd
import pytest

from chfkit.config import SystemConfig
from chfkit.correlations import heat_balance_chf, heated_equivalent_diameter
from chfkit.dataset import CSV_COLUMNS, load_csv, write_csv
from chfkit.main import companion_paths, main
from chfkit.types import ChfRecord, CorrelationId, OperatingPoint

FAST = SystemConfig(hidden=(8,) * 7)
REFERENCE_FLAGS = ["--dhe-mm", "15.2", "--length", "2.0", "--pressure", "7.0", "--mass-flux", "2000", "--dh-sub-in", "100"]


def _parse_lines(text):
    return dict(line.split(": ", 1) for line in text.strip().splitlines())


@pytest.fixture(scope="module")
def trained(tmp_path_factory):
    """Synthetic data set plus two identical short training runs."""

    root = tmp_path_factory.mktemp("cli")
    data = root / "data.csv"
    assert main(["synth", "--seed", "3", "--n", "60", "--out", str(data)]) == 0
    bundles = []
    for name in ("a", "b"):
        bundle = root / f"{name}.json"
        argv = ["train", "--data", str(data), "--kind", "hybrid-katto", "--out", str(bundle), "--seed", "9"]
        assert main(argv + ["--max-epochs", "4", "--patience", "2"], config=FAST) == 0
        bundles.append(bundle)
    return data, bundles


def test_dhe_prints_metres_and_millimetres(capsys):
    assert main(["dhe", "--do", "2", "--di", "1"]) == 0
    lines = _parse_lines(capsys.readouterr().out)
    assert float(lines["d_he_m"]) == 3.0
    assert float(lines["d_he_mm"]) == 3000.0


def test_dhe_matches_library_value_exactly(capsys):
    assert main(["dhe", "--do", "0.0215", "--di", "0.0120"]) == 0
    lines = _parse_lines(capsys.readouterr().out)
    assert float(lines["d_he_m"]) == heated_equivalent_diameter(0.0215, 0.0120)


def test_dhe_rejects_invalid_geometry(capsys):
    assert main(["dhe", "--do", "1", "--di", "1"]) == 4
    assert capsys.readouterr().err.startswith("error:")


def test_predict_with_correlation(capsys):
    assert main(["predict", "--corr", "bowring", *REFERENCE_FLAGS]) == 0
    lines = _parse_lines(capsys.readouterr().out)
    op = OperatingPoint(d_he=15.2 / 1000.0, length=2.0, pressure=7.0, mass_flux=2000.0, dh_sub_in=100.0)
    assert lines["model"] == "base-bowring"
    assert float(lines["q_chf_kw_m2"]) == heat_balance_chf(CorrelationId.BOWRING, op)


@pytest.mark.parametrize(
    "argv",
    [
        ["predict", "--kind", "hybrid-biasi", *REFERENCE_FLAGS],
        ["predict", "--corr", "biasi", "--bundle", "model.json", *REFERENCE_FLAGS],
        ["predict", "--corr", "katto", "--dhe-mm", "15.2"],
        ["synth", "--n", "0", "--out", "unused.csv"],
    ],
)
def test_inconsistent_options_exit_with_usage_code(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_seed_environment_is_a_usage_error(monkeypatch, tmp_path):
    monkeypatch.setenv("CHFKIT_SEED", "not-a-seed")
    assert main(["synth", "--n", "5", "--out", str(tmp_path / "x.csv")]) == 2


def test_missing_data_file_is_an_io_error(tmp_path):
    assert main(["eval", "--data", str(tmp_path / "absent.csv"), "--corr", "biasi", "--all"]) == 5


def test_data_file_that_is_not_utf8_is_a_data_error(tmp_path, capsys):
    path = tmp_path / "latin.csv"
    row = "15.2,2.0,7.0,2000,100,,1500,becker"
    path.write_bytes((",".join(CSV_COLUMNS) + "\n" + row).encode("utf-8") + b"\xff\xfe\n")
    assert main(["eval", "--data", str(path), "--corr", "bowring", "--all"]) == 3
    assert "UTF-8" in capsys.readouterr().err


def test_synth_honours_environment_seed(monkeypatch, tmp_path):
    monkeypatch.setenv("CHFKIT_SEED", "17")
    assert main(["synth", "--n", "10", "--out", str(tmp_path / "env.csv")]) == 0
    assert main(["synth", "--seed", "17", "--n", "10", "--out", str(tmp_path / "flag.csv")]) == 0
    assert (tmp_path / "env.csv").read_bytes() == (tmp_path / "flag.csv").read_bytes()


def test_training_runs_are_byte_identical(trained):
    _, (first, second) = trained
    assert first.read_bytes() == second.read_bytes()
    history_a, split_a = companion_paths(first)
    history_b, split_b = companion_paths(second)
    assert history_a.name == "a.history.csv"
    assert split_a.name == "a.split.json"
    assert history_a.read_bytes() == history_b.read_bytes()
    assert split_a.read_bytes() == split_b.read_bytes()
    assert len(json.loads(split_a.read_text())["test"]) == 3


def test_eval_uses_the_saved_split_and_writes_parity(trained, tmp_path, capsys):
    data, (first, second) = trained
    outputs = []
    for bundle in (first, second):
        parity = tmp_path / f"{bundle.stem}.parity.csv"
        assert main(["eval", "--data", str(data), "--bundle", str(bundle), "--out", str(parity)]) == 0
        outputs.append(capsys.readouterr().out)
        frame = pd.read_csv(parity, nrows=3)
        assert frame["model"].tolist() == ["hybrid-katto"] * 3
    assert outputs[0] == outputs[1]
    lines = _parse_lines(outputs[0])
    assert lines["model"] == "hybrid-katto"
    assert lines["n_points"] == "3"


def test_eval_json_includes_sources(trained, capsys):
    data, (bundle, _) = trained
    assert main(["eval", "--data", str(data), "--corr", "bowring", "--all", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["model"] == "base-bowring"
    assert payload["nPoints"] == 60
    assert list(payload["bySource"]) == ["synthetic"]


def test_eval_of_correlation_needs_a_partition(trained, capsys):
    data, _ = trained
    assert main(["eval", "--data", str(data), "--corr", "katto"]) == 2


def test_bundle_kind_must_match_requested_kind(trained, capsys):
    _, (bundle, _) = trained
    assert main(["predict", "--kind", "pure", "--bundle", str(bundle), *REFERENCE_FLAGS]) == 2


def test_batch_prediction_writes_one_row_per_record(trained, tmp_path):
    data, (bundle, _) = trained
    out = tmp_path / "predictions.csv"
    assert main(["predict", "--bundle", str(bundle), "--data", str(data), "--out", str(out)]) == 0
    frame = pd.read_csv(out)
    assert list(frame.columns) == ["row", "predicted_kw_m2"]
    assert frame["row"].tolist() == list(range(1, 61))
    assert (frame["predicted_kw_m2"] > 0).all()


def test_pca_check_reports_coverage(trained, tmp_path, capsys):
    data, (bundle, _) = trained
    _, split_path = companion_paths(bundle)
    out_dir = tmp_path / "pca"
    assert main(["pca-check", "--data", str(data), "--split", str(split_path), "--out", str(out_dir), "--full-space"]) == 0
    lines = _parse_lines(capsys.readouterr().out)
    assert lines["n_train"] == "54"
    assert lines["n_test"] == "3"
    assert int(lines["inside"]) + int(lines["outside"]) == 3
    assert int(lines["inside_full_space"]) + int(lines["outside_full_space"]) == 3

    projections = pd.read_csv(out_dir / "projections.csv")
    assert len(projections) == 57
    assert set(projections["set"]) == {"train", "test"}
    assert len(pd.read_csv(out_dir / "hull.csv")) == int(lines["hull_vertices"])


def _pca_check_with_split(data, train, test, tmp_path, capsys):
    split_path = tmp_path / "manual.split.json"
    split_path.write_text(json.dumps({"seed": 0, "n": len(train) + len(test), "train": train, "validation": [], "test": test}))
    capsys.readouterr()
    assert main(["pca-check", "--data", str(data), "--split", str(split_path), "--full-space"]) == 0
    return _parse_lines(capsys.readouterr().out)


def test_pca_check_training_rows_are_all_inside(trained, tmp_path, capsys):
    data, _ = trained
    lines = _pca_check_with_split(data, list(range(60)), [0, 5, 17, 42], tmp_path, capsys)
    assert lines["n_test"] == "4"
    assert lines["inside"] == "4"
    assert lines["outside"] == "0"
    assert lines["outside_full_space"] == "0"


def test_pca_check_interior_points_are_inside(trained, tmp_path, capsys):
    data, _ = trained
    records = load_csv(data)
    features = np.array([record.op.as_features() for record in records])
    centroid = features.mean(axis=0)
    interior = [centroid] + [0.5 * centroid + 0.5 * features[i] for i in (0, 11, 23, 37, 52)]
    extra = [ChfRecord(op=OperatingPoint(*(float(v) for v in row)), q_cr=2000.0, source="interior") for row in interior]
    path = tmp_path / "interior.csv"
    write_csv(records + extra, path)

    lines = _pca_check_with_split(path, list(range(60)), list(range(60, 66)), tmp_path, capsys)
    assert lines["n_test"] == "6"
    assert lines["outside"] == "0"
    assert lines["outside_full_space"] == "0"


def test_pca_check_reports_far_record_outside(trained, tmp_path, capsys):
    data, _ = trained
    # every feature about 40 envelope widths above its maximum
    far = "3500.0,118.0,472.0,232000.0,47400.0,,3000.0,far"
    path = tmp_path / "far.csv"
    path.write_text(data.read_text(encoding="utf-8") + far + "\n", encoding="utf-8")

    lines = _pca_check_with_split(path, list(range(60)), [3, 60], tmp_path, capsys)
    assert lines["inside"] == "1"
    assert lines["outside"] == "1"
    assert lines["outside_full_space"] == "1"
