"""Benchmark command line: distance debugging, tuning/evaluation and ensembles.

Subcommands
-----------
dist : distance between two single-series files under one measure
eval : per-fold LOOCV tuning on the train split plus test-set accuracy
tune : same protocol as eval, and prints the chosen configuration per fold
mee  : build a Multivariate Elastic Ensemble per fold and evaluate it

Exit codes: 0 success, 2 usage/IO/parse errors, 3 internal invariant
violations. Results CSVs are byte-identical across reruns and thread counts;
wall-clock timings land in the elapsed_ms column only with --timing (which
is excluded, like --threads and --out, from the embedded config comment).
"""

from __future__ import annotations

import argparse
import os
import sys
import time

import numpy as np

from .core import compute_stats
from .ensemble import MEE_VARIANTS, build_mee, mee_test_accuracy
from .grids import GRID_VERSION, MEASURES, MeasureConfig
from .knn import holdout_accuracy, tune_measure
from .measures import compute_distance
from .transforms import z_normalize_dataset
from .tsio import (
    ResamplePlan, ResultRow, align_labels, load_ts_file, resample_split,
    write_results,
)


class _CliError(Exception):
    """Usage or IO failure; message goes to stderr, exit code 2."""


def _add_common(parser):
    parser.add_argument("--train", required=True, help="training .ts file")
    parser.add_argument("--test", required=True, help="test .ts file")
    parser.add_argument("--norm", action="store_true",
                        help="z-normalize per series, per dimension (default off)")
    parser.add_argument("--folds", type=int, default=1,
                        help="resample folds; fold 0 is the archive split")
    parser.add_argument("--seed", type=int, default=0, help="resampling/tie seed")
    parser.add_argument("--out", required=True, help="results CSV path")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads (results are thread-count invariant)")
    parser.add_argument("--p", type=float, default=1.0,
                        help="norm order combining per-dimension results")
    parser.add_argument("--timing", action="store_true",
                        help="record wall-clock elapsed_ms (breaks byte determinism)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvelastic",
        description="Multivariate elastic measures benchmark",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dist = sub.add_parser("dist", help="distance between two single-series files")
    p_dist.add_argument("--a", required=True, help=".ts file holding one series")
    p_dist.add_argument("--b", required=True, help=".ts file holding one series")
    p_dist.add_argument("--measure", required=True, choices=MEASURES)
    p_dist.add_argument("--strategy", required=True, choices=("i", "d"))
    p_dist.add_argument("--p", type=float, default=1.0)
    p_dist.add_argument("--window", default=None,
                        help="warping band (integer) or 'full'")
    p_dist.add_argument("--g", type=float, default=0.05,
                        help="WDTW/WDDTW penalty level")
    p_dist.add_argument("--epsilon", type=float, default=1.0, help="LCSS threshold")
    p_dist.add_argument("--gap", default="0",
                        help="ERP gap reference: scalar or comma-separated vector")
    p_dist.add_argument("--c", type=float, default=1.0, help="MSM split/merge cost")
    p_dist.add_argument("--nu", type=float, default=1e-3, help="TWE stiffness")
    p_dist.add_argument("--lambda", dest="lam", type=float, default=1.0,
                        help="TWE deletion penalty")

    p_eval = sub.add_parser("eval", help="tune on train, evaluate on test")
    _add_common(p_eval)
    p_eval.add_argument("--measure", required=True,
                        help="measure name or 'all'")
    p_eval.add_argument("--strategy", required=True, choices=("i", "d"))

    p_tune = sub.add_parser("tune", help="eval protocol, printing tuned configs")
    _add_common(p_tune)
    p_tune.add_argument("--measure", required=True, help="measure name or 'all'")
    p_tune.add_argument("--strategy", required=True, choices=("i", "d"))

    p_mee = sub.add_parser("mee", help="build and evaluate an elastic ensemble")
    _add_common(p_mee)
    p_mee.add_argument("--variant", required=True, choices=MEE_VARIANTS)
    p_mee.add_argument("--model-out", default=None,
                       help="write the per-member model summary here")
    return parser


def _window_arg(value):
    if value is None or str(value).lower() == "full":
        return None
    try:
        return int(value)
    except ValueError:
        raise _CliError(f"--window expects an integer or 'full', got {value!r}")


def _load_single_series(path):
    ts = _load(path)
    if ts.dataset.n_instances != 1:
        raise _CliError(f"{path}: expected exactly one series, "
                        f"found {ts.dataset.n_instances}")
    return ts.dataset.X[0]


def _load(path):
    try:
        return load_ts_file(path)
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise _CliError(f"{path}: {exc}") from exc


def _strategy_name(flag: str) -> str:
    return "independent" if flag == "i" else "dependent"


def _dist_config(args) -> MeasureConfig:
    m = args.measure
    kwargs = {}
    if m in ("dtw", "ddtw"):
        kwargs["window"] = _window_arg(args.window)
    elif m in ("wdtw", "wddtw"):
        kwargs["g"] = args.g
    elif m == "lcss":
        kwargs["epsilon"] = args.epsilon
        kwargs["window"] = _window_arg(args.window)
    elif m == "erp":
        gap = [float(tok) for tok in str(args.gap).split(",")]
        kwargs["gap"] = gap[0] if len(gap) == 1 else np.array(gap)
        kwargs["window"] = _window_arg(args.window)
    elif m == "msm":
        kwargs["cost"] = args.c
    elif m == "twe":
        kwargs["nu"] = args.nu
        kwargs["lam"] = args.lam
    return MeasureConfig(m, _strategy_name(args.strategy), p=args.p, **kwargs)


def _cmd_dist(args) -> int:
    a = _load_single_series(args.a)
    b = _load_single_series(args.b)
    config = _dist_config(args)
    try:
        value = compute_distance(a, b, config)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    print(format(value, ".12g"))
    return 0


def _prepare_fold(train, test, args, fold):
    tr, te = resample_split(train, test, ResamplePlan(seed=args.seed, fold=fold))
    if args.norm:
        tr = z_normalize_dataset(tr)
        te = z_normalize_dataset(te)
    return tr, te


def _config_comment(args, extra: str) -> str:
    parts = [
        f"mvelastic grid_version={GRID_VERSION}",
        f"command={args.command}",
        extra,
        f"norm={'on' if args.norm else 'off'}",
        f"folds={args.folds}",
        f"seed={args.seed}",
        f"p={args.p:g}",
    ]
    return " ".join(parts)


def _dataset_name(ts_file, path) -> str:
    name = ts_file.directive("problemName")
    if name:
        return name.split()[0]
    stem = os.path.splitext(os.path.basename(path))[0]
    return stem.removesuffix("_TRAIN")


def _cmd_eval(args, verbose_models: bool) -> int:
    train_file = _load(args.train)
    test_file = _load(args.test)
    train, test = align_labels(train_file.dataset, test_file.dataset)
    name = _dataset_name(train_file, args.train)
    measure_list = list(MEASURES) if args.measure == "all" else [args.measure]
    for m in measure_list:
        if m not in MEASURES:
            raise _CliError(f"unknown measure {m!r}; expected one of {MEASURES} or 'all'")
    strategy = _strategy_name(args.strategy)

    rows = []
    for fold in range(args.folds):
        tr, te = _prepare_fold(train, test, args, fold)
        stats = compute_stats(tr)
        for m in measure_list:
            started = time.perf_counter()
            model = tune_measure(tr, m, strategy, stats, n_jobs=args.threads)
            acc = holdout_accuracy(model, tr, te, n_jobs=args.threads)
            elapsed = int((time.perf_counter() - started) * 1000) if args.timing else 0
            rows.append(ResultRow(
                dataset=name, measure=m, strategy=strategy, fold=fold,
                params=model.config.params_string(), train_acc=model.train_accuracy,
                test_acc=acc, elapsed_ms=elapsed, seed=args.seed,
            ))
            if verbose_models:
                print(f"fold={fold} {model.summary()} test_acc={acc:.6f}")
    comment = _config_comment(
        args, f"measure={args.measure} strategy={strategy}"
    )
    _write_out(args.out, write_results(rows, comment))
    return 0


def _cmd_mee(args) -> int:
    train_file = _load(args.train)
    test_file = _load(args.test)
    train, test = align_labels(train_file.dataset, test_file.dataset)
    name = _dataset_name(train_file, args.train)

    rows = []
    summaries = []
    for fold in range(args.folds):
        tr, te = _prepare_fold(train, test, args, fold)
        stats = compute_stats(tr)
        started = time.perf_counter()
        model = build_mee(tr, args.variant, stats, seed=args.seed,
                          n_jobs=args.threads)
        acc = mee_test_accuracy(model, te, n_jobs=args.threads)
        elapsed = int((time.perf_counter() - started) * 1000) if args.timing else 0
        train_acc = float(np.mean([m.train_accuracy for m in model.members]))
        rows.append(ResultRow(
            dataset=name, measure="mee", strategy=args.variant, fold=fold,
            params=f"members={len(model.members)}", train_acc=train_acc,
            test_acc=acc, elapsed_ms=elapsed, seed=args.seed,
        ))
        summaries.append(f"fold={fold} test_acc={acc:.6f}\n" + model.summary())
    comment = _config_comment(args, f"variant={args.variant}")
    _write_out(args.out, write_results(rows, comment))
    if args.model_out:
        _write_out(args.model_out, "\n".join(summaries))
    return 0


def _write_out(path, text) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _CliError(f"cannot write {path}: {exc}") from exc


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "dist":
            return _cmd_dist(args)
        if args.command == "eval":
            return _cmd_eval(args, verbose_models=False)
        if args.command == "tune":
            return _cmd_eval(args, verbose_models=True)
        if args.command == "mee":
            return _cmd_mee(args)
        raise AssertionError(args.command)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
