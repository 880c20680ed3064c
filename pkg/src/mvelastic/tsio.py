"""Text-format dataset I/O, seeded resampling and the results CSV.

The dataset format is the archive text convention used by the UEA/UCR
classification repositories: '@key value' header lines, then '@data'
followed by one series per line, dimensions separated by ':', values within
a dimension comma-separated, and the final ':'-field holding the class
label. Only the equal-length, no-missing-value subset is accepted.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .core import LabeledDataset


class TsParseError(ValueError):
    """Base class for dataset text-format errors."""


class MissingDataSectionError(TsParseError):
    pass


class RaggedSeriesError(TsParseError):
    pass


class UnparsableValueError(TsParseError):
    pass


class MissingLabelError(TsParseError):
    pass


class IncompatibleDatasetsError(ValueError):
    """Raised when train/test splits cannot be pooled for resampling."""


@dataclass(frozen=True)
class TsFile:
    """Parsed dataset file: raw header directives plus the dataset."""

    directives: tuple
    dataset: LabeledDataset

    def directive(self, key: str, default=None):
        key = key.lower()
        for k, v in self.directives:
            if k.lower() == key:
                return v
        return default


def parse_ts_file(text: str) -> TsFile:
    """Parse the archive text format into a dataset.

    Header lines start with '@' (keys stored verbatim, matched
    case-insensitively); comment lines starting '#' and blank lines are
    skipped. Everything after '@data' is one series per line.

    Raises
    ------
    MissingDataSectionError, MissingLabelError, UnparsableValueError,
    RaggedSeriesError
        With line/column diagnostics where applicable.
    """
    directives = []
    series = []
    labels = []
    in_data = False
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if not in_data:
            if line.startswith("@"):
                key, _, value = line[1:].partition(" ")
                if key.lower() == "data":
                    in_data = True
                else:
                    directives.append((key, value.strip()))
                continue
            raise MissingDataSectionError(
                f"line {lineno}: data-like line before any '@data' directive"
            )
        fields = line.split(":")
        if len(fields) < 2:
            raise MissingLabelError(
                f"line {lineno}: no ':'-separated class label"
            )
        label = fields[-1].strip()
        if not label:
            raise MissingLabelError(f"line {lineno}: empty class label")
        dims = []
        for col, chunk in enumerate(fields[:-1], start=1):
            values = []
            for tok in chunk.split(","):
                tok = tok.strip()
                try:
                    values.append(float(tok))
                except ValueError:
                    raise UnparsableValueError(
                        f"line {lineno}, dimension {col}: "
                        f"non-numeric value {tok!r}"
                    ) from None
            dims.append(values)
        lengths = {len(v) for v in dims}
        if len(lengths) != 1:
            raise RaggedSeriesError(
                f"line {lineno}: dimensions have unequal lengths {sorted(lengths)}"
            )
        series.append(np.array(dims, dtype=np.float64).T)  # (L, D)
        labels.append(label)
    if not in_data:
        raise MissingDataSectionError("no '@data' line found")
    if not series:
        raise MissingDataSectionError("'@data' section contains no series")
    shape = series[0].shape
    for k, s in enumerate(series):
        if s.shape != shape:
            raise RaggedSeriesError(
                f"series 1 has shape {shape} but series {k + 1} has shape {s.shape}"
            )
    dataset = LabeledDataset.from_arrays(
        np.stack(series), np.array(labels, dtype=object)
    )
    return TsFile(directives=tuple(directives), dataset=dataset)


def load_ts_file(path) -> TsFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ts_file(fh.read())


def format_ts_file(dataset: LabeledDataset, problem_name: str = "dataset") -> str:
    """Render a dataset back into the archive text format (round-trippable)."""
    lines = [
        f"@problemName {problem_name}",
        "@timeStamps false",
        "@univariate " + ("true" if dataset.n_dims == 1 else "false"),
        f"@dimensions {dataset.n_dims}",
        "@equalLength true",
        f"@seriesLength {dataset.length}",
        "@classLabel true " + " ".join(dataset.label_names),
        "@data",
    ]
    for k in range(dataset.n_instances):
        grid = dataset.X[k]
        dims = [",".join(repr(float(v)) for v in grid[:, d])
                for d in range(dataset.n_dims)]
        lines.append(":".join(dims) + ":" + dataset.label_names[dataset.y[k]])
    return "\n".join(lines) + "\n"


def align_labels(train: LabeledDataset, test: LabeledDataset):
    """Remap two datasets onto one shared, sorted label universe."""
    names = sorted(set(train.label_names) | set(test.label_names))
    lookup = {name: k for k, name in enumerate(names)}

    def remap(ds):
        ids = np.array([lookup[ds.label_names[v]] for v in ds.y], dtype=np.int64)
        return LabeledDataset.from_arrays(ds.X, ids, names)

    return remap(train), remap(test)


@dataclass(frozen=True)
class ResamplePlan:
    """Seeded, stratified re-split of pooled train/test instances.

    Fold 0 is the archive's default split (inputs returned unchanged).
    ``train_fraction`` is informational: splits preserve the original
    per-class training counts exactly, which fixes the fraction.
    """

    seed: int
    fold: int
    train_fraction: float | None = None

    def __post_init__(self):
        if self.fold < 0:
            raise ValueError("fold must be >= 0")
        if self.train_fraction is not None and not 0.0 < self.train_fraction < 1.0:
            raise ValueError("train_fraction must lie in (0, 1)")


def resample_split(train: LabeledDataset, test: LabeledDataset,
                   plan: ResamplePlan):
    """Pool, shuffle and stratified-re-split two datasets.

    Fold 0 returns the inputs unchanged. Fold k >= 1 pools both sets,
    shuffles each class with a generator seeded by (seed, fold), and
    re-splits preserving the original per-class training counts, so sizes and
    class proportions are exactly preserved. The pooled instance set is
    partitioned: nothing is duplicated or dropped.
    """
    if train.X.shape[1:] != test.X.shape[1:]:
        raise IncompatibleDatasetsError(
            f"series shapes differ: {train.X.shape[1:]} vs {test.X.shape[1:]}"
        )
    if train.label_names != test.label_names:
        raise IncompatibleDatasetsError(
            "label universes differ; align labels before resampling"
        )
    if plan.fold == 0:
        return train, test

    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence([plan.seed, plan.fold]))
    )
    X = np.concatenate([train.X, test.X])
    y = np.concatenate([train.y, test.y])
    train_idx = []
    test_idx = []
    for cls in range(len(train.label_names)):
        cls_idx = np.flatnonzero(y == cls)
        cls_idx = cls_idx[rng.permutation(len(cls_idx))]
        k = int(np.sum(train.y == cls))
        train_idx.extend(cls_idx[:k].tolist())
        test_idx.extend(cls_idx[k:].tolist())
    train_idx = np.array(sorted(train_idx), dtype=np.int64)
    test_idx = np.array(sorted(test_idx), dtype=np.int64)
    new_train = LabeledDataset.from_arrays(X[train_idx], y[train_idx], train.label_names)
    new_test = LabeledDataset.from_arrays(X[test_idx], y[test_idx], train.label_names)
    return new_train, new_test


RESULT_FIELDS = (
    "dataset", "measure", "strategy", "fold", "params",
    "train_acc", "test_acc", "elapsed_ms", "seed",
)


@dataclass
class ResultRow:
    dataset: str
    measure: str
    strategy: str
    fold: int
    params: str
    train_acc: float
    test_acc: float
    elapsed_ms: int
    seed: int


def write_results(rows, comment: str | None = None) -> str:
    """Render result rows as CSV text.

    Rows are sorted by (dataset, measure, strategy, fold); accuracies print
    with 6 decimals. An optional configuration comment is emitted first as a
    '#'-prefixed line so every results file is self-describing.
    """
    buf = io.StringIO()
    if comment:
        for line in comment.splitlines():
            buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RESULT_FIELDS)
    for row in sorted(rows, key=lambda r: (r.dataset, r.measure, r.strategy, r.fold)):
        writer.writerow([
            row.dataset, row.measure, row.strategy, str(row.fold), row.params,
            f"{row.train_acc:.6f}", f"{row.test_acc:.6f}",
            str(int(row.elapsed_ms)), str(row.seed),
        ])
    return buf.getvalue()
