"""CLI entrypoint: geometry helper, prediction, training, evaluation and diagnostics."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import pandas as pd

from .config import RunConfig, SystemConfig
from .correlations import heated_equivalent_diameter
from .dataset import (
    SplitIndices,
    feature_matrix,
    load_csv,
    load_split,
    save_split,
    split,
    synth_generate,
    validate_envelope,
    write_csv,
)
from .errors import ChfError, IoError, UsageError
from .evaluation import (
    format_report,
    hull5d_contains,
    hull_and_containment,
    metrics,
    metrics_by_source,
    parity_export,
    pca_fit,
    serialize_evaluation,
)
from .models import BundleModel, ChfModel, CorrelationModel, load, save
from .net import write_history
from .orchestrator import PipelineOrchestrator
from .seeding import resolve_seed
from .stages import PipelineState
from .types import ChfRecord, CorrelationId, ModelKind, OperatingPoint

logger = logging.getLogger("chfkit")

KIND_CHOICES = [kind.value for kind in ModelKind]
CORR_CHOICES = [corr.value for corr in CorrelationId]


def companion_paths(bundle_path: Path) -> Tuple[Path, Path]:
    """History CSV and split JSON written next to a bundle: ``<stem>.history.csv``, ``<stem>.split.json``."""

    stem = bundle_path.with_suffix("")
    return stem.with_name(stem.name + ".history.csv"), stem.with_name(stem.name + ".split.json")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--log-level", default="WARNING", help="Logging level (logs go to stderr)")


def _add_operating_point(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("operating point")
    group.add_argument("--dhe-mm", type=float, help="Heated equivalent diameter (mm)")
    group.add_argument("--length", type=float, help="Heated length (m)")
    group.add_argument("--pressure", type=float, help="Outlet pressure (MPa)")
    group.add_argument("--mass-flux", type=float, help="Mass flux (kg/m2/s)")
    group.add_argument("--dh-sub-in", type=float, help="Inlet subcooling (kJ/kg)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chfkit", description="Critical heat flux prediction for internally heated annuli"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dhe = sub.add_parser("dhe", help="Heated equivalent diameter of an annulus")
    dhe.add_argument("--do", dest="d_o", type=float, required=True, help="Outer diameter (m)")
    dhe.add_argument("--di", dest="d_i", type=float, required=True, help="Heated inner diameter (m)")
    _add_common(dhe)
    dhe.set_defaults(handler=cmd_dhe)

    predict = sub.add_parser("predict", help="Predict CHF with a correlation or a trained model")
    predict.add_argument("--kind", choices=KIND_CHOICES, help="ML model kind (needs --bundle)")
    predict.add_argument("--corr", choices=CORR_CHOICES, help="Standalone base correlation")
    predict.add_argument("--bundle", type=Path, help="Trained model bundle")
    predict.add_argument("--data", type=Path, help="Batch input CSV (data schema)")
    predict.add_argument("--out", type=Path, help="Batch output CSV (default: stdout)")
    _add_operating_point(predict)
    _add_common(predict)
    predict.set_defaults(handler=cmd_predict)

    train = sub.add_parser("train", help="Train a pure or hybrid model")
    train.add_argument("--data", type=Path, required=True)
    train.add_argument("--kind", choices=KIND_CHOICES, required=True)
    train.add_argument("--out", type=Path, required=True, help="Bundle path; history and split are written alongside")
    train.add_argument("--seed", type=int, default=None, help="Seed (fallback: $CHFKIT_SEED, then 0)")
    train.add_argument("--lr0", type=float, default=None)
    train.add_argument("--batch", type=int, default=None)
    train.add_argument("--max-epochs", type=int, default=None)
    train.add_argument("--patience", type=int, default=None)
    _add_common(train)
    train.set_defaults(handler=cmd_train)

    evaluate = sub.add_parser("eval", help="Metrics and parity data on the held-out partition")
    evaluate.add_argument("--data", type=Path, required=True)
    evaluate.add_argument("--bundle", type=Path)
    evaluate.add_argument("--corr", choices=CORR_CHOICES)
    evaluate.add_argument("--split", type=Path, help="Split JSON (default: the one written next to --bundle)")
    evaluate.add_argument("--all", action="store_true", help="Evaluate every record instead of the test partition")
    evaluate.add_argument("--out", type=Path, help="Parity CSV path")
    evaluate.add_argument("--json", action="store_true", help="Print metrics as JSON")
    _add_common(evaluate)
    evaluate.set_defaults(handler=cmd_eval)

    pca = sub.add_parser("pca-check", help="PCA + convex hull coverage of the test partition")
    pca.add_argument("--data", type=Path, required=True)
    pca.add_argument("--seed", type=int, default=None)
    pca.add_argument("--split", type=Path, help="Split JSON instead of re-splitting with --seed")
    pca.add_argument("--out", type=Path, help="Directory for projections.csv and hull.csv")
    pca.add_argument("--full-space", action="store_true", help="Also check membership in the 5-D training hull")
    _add_common(pca)
    pca.set_defaults(handler=cmd_pca_check)

    synth = sub.add_parser("synth", help="Generate a synthetic data set")
    synth.add_argument("--seed", type=int, default=None)
    synth.add_argument("--n", type=int, required=True)
    synth.add_argument("--out", type=Path, required=True)
    _add_common(synth)
    synth.set_defaults(handler=cmd_synth)
    return parser


def run_config_from_args(args: argparse.Namespace, config: SystemConfig) -> RunConfig:
    seed_flag = getattr(args, "seed", None)
    return RunConfig(
        command=args.command,
        seed=resolve_seed(seed_flag, config.seed),
        data=getattr(args, "data", None),
        bundle=getattr(args, "bundle", None),
        out=getattr(args, "out", None),
        split=getattr(args, "split", None),
        kind=ModelKind(args.kind) if getattr(args, "kind", None) else None,
        corr=CorrelationId(args.corr) if getattr(args, "corr", None) else None,
        overrides={
            "lr0": getattr(args, "lr0", None),
            "batch_size": getattr(args, "batch", None),
            "max_epochs": getattr(args, "max_epochs", None),
            "patience": getattr(args, "patience", None),
        },
    )


def _emit(lines: Sequence[str]) -> None:
    print("\n".join(lines))


def cmd_dhe(args: argparse.Namespace, run: RunConfig, config: SystemConfig) -> int:
    d_he = heated_equivalent_diameter(args.d_o, args.d_i)
    _emit([f"d_he_m: {d_he!r}", f"d_he_mm: {d_he * 1000.0!r}"])
    return 0


def _model_from_run(run: RunConfig) -> ChfModel:
    if run.corr is not None and (run.kind is not None or run.bundle is not None):
        raise UsageError("--corr cannot be combined with --kind or --bundle")
    if run.corr is not None:
        return CorrelationModel(run.corr)
    if run.bundle is None:
        if run.kind is not None:
            raise UsageError(f"model kind {run.kind.value!r} needs --bundle")
        raise UsageError("choose a model with --corr or --bundle")
    bundle = load(run.bundle)
    if run.kind is not None and bundle.kind != run.kind:
        raise UsageError(f"bundle {run.bundle} holds a {bundle.kind.value} model, not {run.kind.value}")
    return BundleModel(bundle)


def _operating_point_from_args(args: argparse.Namespace) -> OperatingPoint:
    values = {
        "--dhe-mm": args.dhe_mm,
        "--length": args.length,
        "--pressure": args.pressure,
        "--mass-flux": args.mass_flux,
        "--dh-sub-in": args.dh_sub_in,
    }
    missing = [flag for flag, value in values.items() if value is None]
    if missing:
        raise UsageError(f"missing operating point flags: {' '.join(missing)} (or pass --data)")
    try:
        return OperatingPoint(
            d_he=args.dhe_mm / 1000.0,
            length=args.length,
            pressure=args.pressure,
            mass_flux=args.mass_flux,
            dh_sub_in=args.dh_sub_in,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_predict(args: argparse.Namespace, run: RunConfig, config: SystemConfig) -> int:
    model = _model_from_run(run)
    if run.data is None:
        value = model.predict(_operating_point_from_args(args))
        _emit([f"model: {model.name}", f"q_chf_kw_m2: {value!r}"])
        return 0

    records = load_csv(run.data)
    predictions = model.predict_many([record.op for record in records])
    frame = pd.DataFrame({"row": range(1, len(records) + 1), "predicted_kw_m2": predictions})
    if run.out is None:
        sys.stdout.write(frame.to_csv(index=False, lineterminator="\n"))
        return 0
    try:
        frame.to_csv(run.out, index=False, encoding="utf-8", lineterminator="\n")
    except OSError as exc:
        raise IoError(str(run.out), exc.strerror or str(exc)) from exc
    logger.info("Wrote %d predictions to %s", len(frame), run.out)
    return 0


def _load_records(path: Path) -> List[ChfRecord]:
    records = load_csv(path)
    report = validate_envelope(records)
    if report.flags:
        logger.warning(
            "%d of %d records lie (partly) outside the compiled-data envelope",
            len(report.flagged_indices),
            report.n_records,
        )
    return records


def cmd_train(args: argparse.Namespace, run: RunConfig, config: SystemConfig) -> int:
    assert run.kind is not None and run.data is not None and run.out is not None
    records = _load_records(run.data)
    try:
        train_config = config.train_config(run.seed, run.overrides)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    stages = config.create_stages(run.kind)
    level = logging.getLogger().level
    for stage in stages:
        stage.configure_logger(level=level)
    state = PipelineOrchestrator(stages).run(
        PipelineState(records=records, kind=run.kind, seed=run.seed, train_config=train_config)
    )

    history_path, split_path = companion_paths(run.out)
    save(state.require("bundle"), run.out)
    history = state.require("history")
    write_history(history, history_path)
    indices = SplitIndices.from_split(state.require("split"))
    save_split(indices, split_path)
    _emit(
        [
            f"kind: {run.kind.value}",
            f"seed: {run.seed}",
            f"bundle: {run.out}",
            f"history: {history_path}",
            f"split: {split_path}",
            f"epochs_run: {history.epochs_run}",
            f"best_epoch: {history.best_epoch}",
            f"best_val_loss: {history.best_val_loss!r}",
            f"n_test: {len(indices.test)}",
        ]
    )
    return 0


def cmd_eval(args: argparse.Namespace, run: RunConfig, config: SystemConfig) -> int:
    assert run.data is not None
    model = _model_from_run(run)
    records = _load_records(run.data)
    if args.all:
        selected = records
    else:
        split_path = run.split
        if split_path is None and run.bundle is not None:
            split_path = companion_paths(run.bundle)[1]
        if split_path is None:
            raise UsageError("pass --split (or --all) to evaluate a standalone correlation")
        if not split_path.exists():
            raise UsageError(f"split file {split_path} not found; pass --split or --all")
        indices = load_split(split_path)
        selected = indices.select(records, "test")

    predictions = model.predict_many([record.op for record in selected])
    report = metrics(predictions, [record.q_cr for record in selected], model=model.name)
    if run.out is not None:
        parity_export(report, run.out)
    if args.json:
        by_source = metrics_by_source(predictions, selected, model=model.name)
        print(json.dumps(serialize_evaluation(report, by_source), indent=2))
    else:
        print(format_report(report))
    return 0


def _write_frame(frame: pd.DataFrame, path: Path) -> None:
    try:
        frame.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    except OSError as exc:
        raise IoError(str(path), exc.strerror or str(exc)) from exc


def cmd_pca_check(args: argparse.Namespace, run: RunConfig, config: SystemConfig) -> int:
    assert run.data is not None
    records = _load_records(run.data)
    if run.split is not None:
        indices = load_split(run.split)
        train_idx, test_idx = indices.train, indices.test
        indices.select(records, "train")
        indices.select(records, "test")
    else:
        dataset = split(records, run.seed)
        train_idx, test_idx = dataset.train_indices, dataset.test_indices

    x_train = feature_matrix([records[i] for i in train_idx])
    x_test = feature_matrix([records[i] for i in test_idx])
    pca = pca_fit(x_train)
    p_train = pca.project(x_train)
    p_test = pca.project(x_test)
    hull, inside = hull_and_containment(p_train.tolist(), p_test.tolist())
    n_inside = sum(inside)
    ratio = pca.explained_ratio
    lines = [
        f"n_train: {len(train_idx)}",
        f"n_test: {len(test_idx)}",
        f"explained_variance_pct: {100.0 * ratio[0]:.4f} {100.0 * ratio[1]:.4f}",
        f"hull_vertices: {len(hull.vertices)}",
        f"inside: {n_inside}",
        f"outside: {len(inside) - n_inside}",
    ]
    if args.full_space:
        z_train = (x_train - pca.mean) / pca.scale
        z_test = (x_test - pca.mean) / pca.scale
        inside_5d = hull5d_contains(z_train, z_test)
        lines.append(f"inside_full_space: {sum(inside_5d)}")
        lines.append(f"outside_full_space: {len(inside_5d) - sum(inside_5d)}")

    if run.out is not None:
        try:
            run.out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise IoError(str(run.out), exc.strerror or str(exc)) from exc
        rows = [("train", i, float(p[0]), float(p[1]), 1) for i, p in zip(train_idx, p_train)]
        rows += [("test", i, float(p[0]), float(p[1]), int(flag)) for i, p, flag in zip(test_idx, p_test, inside)]
        _write_frame(pd.DataFrame(rows, columns=["set", "index", "pc1", "pc2", "inside"]), run.out / "projections.csv")
        _write_frame(pd.DataFrame(list(hull.vertices), columns=["pc1", "pc2"]), run.out / "hull.csv")
        logger.info("Wrote projections and hull to %s", run.out)
    _emit(lines)
    return 0


def cmd_synth(args: argparse.Namespace, run: RunConfig, config: SystemConfig) -> int:
    assert run.out is not None
    records = synth_generate(
        run.seed,
        args.n,
        bias_amplitude=config.synth_bias_amplitude,
        noise=config.synth_noise,
    )
    write_csv(records, run.out)
    _emit([f"n: {len(records)}", f"seed: {run.seed}", f"out: {run.out}"])
    return 0


Handler = Callable[[argparse.Namespace, RunConfig, SystemConfig], int]


def main(argv: Optional[List[str]] = None, config: Optional[SystemConfig] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    config = config or SystemConfig()
    handler: Handler = args.handler
    try:
        run = run_config_from_args(args, config)
        return handler(args, run, config)
    except ChfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
