"""Benchmark target functions, synthetic dataset generation, normalization,
file ingestion, and train/test splitting.

All synthetic inputs live on the unit hypercube. CSV and KEEL-style .dat
files are parsed with the last column as the regression target.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SAMPLING_UNIFORM = "uniform"
SAMPLING_GRID = "grid"


def tf_sine_exp_1d(x):
    """sin(20 exp(x)) * x^2, fluctuations grow along [0, 1]."""
    x = np.asarray(x, dtype=float)
    return np.sin(20.0 * np.exp(x)) * x**2


def tf_three_gaussians_1d(x):
    """Sum of three narrow Gaussian bumps centered at 0.4, 0.5 and 0.25."""
    x = np.asarray(x, dtype=float)
    return (
        0.2 * np.exp(-((10.0 * x - 4.0) ** 2))
        + 0.5 * np.exp(-((80.0 * x - 40.0) ** 2))
        + 0.3 * np.exp(-((80.0 * x - 20.0) ** 2))
    )


def tf_sine_exp_2d(x1, x2):
    """Additive two-variable version of the sine-exp target."""
    return tf_sine_exp_1d(x1) + tf_sine_exp_1d(x2)


# registered target functions: id -> (vectorized fn over X (N, n), input dim)
TARGET_FUNCTIONS = {
    "sine-exp-1d": (lambda X: tf_sine_exp_1d(X[:, 0]), 1),
    "three-gauss-1d": (lambda X: tf_three_gaussians_1d(X[:, 0]), 1),
    "sine-exp-2d": (lambda X: tf_sine_exp_2d(X[:, 0], X[:, 1]), 2),
}


@dataclass
class Dataset:
    """Input matrix X (N, n) and target vector y (N,)."""

    X: np.ndarray
    y: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        self.X = np.atleast_2d(np.asarray(self.X, dtype=float))
        self.y = np.asarray(self.y, dtype=float).ravel()
        if self.X.shape[0] != self.y.shape[0]:
            raise ValueError(f"X has {self.X.shape[0]} rows but y has {self.y.shape[0]}")
        if self.X.shape[0] < 1:
            raise ValueError("dataset must contain at least one sample")
        if not (np.all(np.isfinite(self.X)) and np.all(np.isfinite(self.y))):
            raise ValueError(f"dataset {self.name!r} contains non-finite values")

    @property
    def n_samples(self) -> int:
        return self.X.shape[0]

    @property
    def n_inputs(self) -> int:
        return self.X.shape[1]


@dataclass(frozen=True)
class Normalizer:
    """Affine min-max maps fitted on one dataset, applicable to another.

    Constant columns map to the midpoint of the target range. Values of
    later data outside the fitted min/max extend linearly beyond the range.
    """

    x_min: np.ndarray | None = None
    x_max: np.ndarray | None = None
    input_range: tuple[float, float] | None = None
    y_min: float | None = None
    y_max: float | None = None
    output_range: tuple[float, float] | None = None

    @staticmethod
    def _affine(v, vmin, vmax, lo, hi):
        span = vmax - vmin
        mid = 0.5 * (lo + hi)
        with np.errstate(invalid="ignore", divide="ignore"):
            scaled = lo + (v - vmin) * (hi - lo) / span
        return np.where(span == 0, mid, scaled)

    def transform_X(self, X: np.ndarray) -> np.ndarray:
        if self.input_range is None:
            return np.asarray(X, dtype=float).copy()
        return self._affine(np.asarray(X, dtype=float), self.x_min, self.x_max, *self.input_range)

    def transform_y(self, y: np.ndarray) -> np.ndarray:
        if self.output_range is None:
            return np.asarray(y, dtype=float).copy()
        return self._affine(np.asarray(y, dtype=float), self.y_min, self.y_max, *self.output_range)

    def inverse_y(self, y_scaled: np.ndarray) -> np.ndarray:
        if self.output_range is None:
            return np.asarray(y_scaled, dtype=float).copy()
        lo, hi = self.output_range
        return self._affine(np.asarray(y_scaled, dtype=float), lo, hi, self.y_min, self.y_max)

    def transform(self, ds: Dataset) -> Dataset:
        return Dataset(X=self.transform_X(ds.X), y=self.transform_y(ds.y), name=ds.name)


def normalize(
    ds: Dataset,
    input_range: tuple[float, float] | None = None,
    output_range: tuple[float, float] | None = None,
) -> tuple[Dataset, Normalizer]:
    """Fit a min-max Normalizer on ds and return (transformed ds, normalizer).

    Ranges set to None leave the corresponding side untouched. Apply the
    returned normalizer to held-out data so only training statistics are
    used.
    """
    norm = Normalizer(
        x_min=ds.X.min(axis=0) if input_range is not None else None,
        x_max=ds.X.max(axis=0) if input_range is not None else None,
        input_range=input_range,
        y_min=float(ds.y.min()) if output_range is not None else None,
        y_max=float(ds.y.max()) if output_range is not None else None,
        output_range=output_range,
    )
    return norm.transform(ds), norm


def make_synthetic(
    tf_id: str,
    n_samples: int,
    sampling: str = SAMPLING_UNIFORM,
    noise_amplitude: float = 0.0,
    seed: int = 0,
) -> Dataset:
    """Sample a registered target function on the unit hypercube.

    'uniform' draws inputs i.i.d. U[0, 1); 'grid' uses an evenly spaced grid
    including both endpoints (in 2-D, n_samples must be a perfect square).
    Positive noise_amplitude adds i.i.d. U(-amp, amp) to the targets.
    """
    if tf_id not in TARGET_FUNCTIONS:
        raise ValueError(f"unknown target function {tf_id!r}, expected one of {sorted(TARGET_FUNCTIONS)}")
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got {n_samples}")
    if noise_amplitude < 0:
        raise ValueError(f"noise_amplitude must be >= 0, got {noise_amplitude}")
    fn, n_dim = TARGET_FUNCTIONS[tf_id]
    rng = np.random.default_rng(seed)

    if sampling == SAMPLING_UNIFORM:
        X = rng.uniform(0.0, 1.0, size=(n_samples, n_dim))
    elif sampling == SAMPLING_GRID:
        if n_dim == 1:
            X = np.linspace(0.0, 1.0, n_samples)[:, None]
        else:
            side = round(n_samples ** (1.0 / n_dim))
            if side**n_dim != n_samples:
                raise ValueError(
                    f"grid sampling in {n_dim}-D needs a perfect {n_dim}-th power, got {n_samples}"
                )
            g = np.linspace(0.0, 1.0, side)
            mesh = np.meshgrid(*([g] * n_dim), indexing="ij")
            X = np.column_stack([m.ravel() for m in mesh])
    else:
        raise ValueError(f"unknown sampling {sampling!r}")

    y = fn(X)
    if noise_amplitude > 0:
        y = y + rng.uniform(-noise_amplitude, noise_amplitude, size=n_samples)
    return Dataset(X=X, y=y, name=f"{tf_id}:{sampling}:{n_samples}")


def _parse_numeric_row(line: str, path: str, lineno: int) -> list[float]:
    parts = line.split(",")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise ValueError(f"{path}:{lineno}: cannot parse row {line!r} as numbers") from None


def load_table(path: str, fmt: str | None = None) -> Dataset:
    """Load a numeric table; the last column is the target.

    fmt 'csv': comma-separated rows, a single leading non-numeric header
    line is skipped. fmt 'keel': lines starting with '@' are metadata and
    skipped. None infers 'keel' for .dat files, 'csv' otherwise.
    """
    if fmt is None:
        fmt = "keel" if str(path).lower().endswith(".dat") else "csv"
    if fmt not in ("csv", "keel"):
        raise ValueError(f"unknown table format {fmt!r}")

    rows: list[list[float]] = []
    n_cols = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if fmt == "keel" and line.startswith("@"):
                continue
            if fmt == "csv" and not rows and lineno == 1:
                try:
                    rows.append([float(p) for p in line.split(",")])
                    n_cols = len(rows[0])
                    continue
                except ValueError:
                    continue  # header line
            values = _parse_numeric_row(line, str(path), lineno)
            if n_cols is None:
                n_cols = len(values)
            elif len(values) != n_cols:
                raise ValueError(
                    f"{path}:{lineno}: expected {n_cols} columns, got {len(values)}"
                )
            rows.append(values)
    if not rows:
        raise ValueError(f"{path}: no data rows found")
    if n_cols < 2:
        raise ValueError(f"{path}: need at least one input column plus the target")
    table = np.asarray(rows, dtype=float)
    return Dataset(X=table[:, :-1], y=table[:, -1], name=str(path))


def save_table(ds: Dataset, path: str) -> None:
    """Write a dataset as CSV with a header; 17 significant digits round-trip
    float64 exactly."""
    header = ",".join([f"x{k + 1}" for k in range(ds.n_inputs)] + ["y"])
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for row, target in zip(ds.X, ds.y):
            fh.write(",".join(f"{v:.17g}" for v in row) + f",{target:.17g}\n")


def split_train_test(ds: Dataset, train_fraction: float, seed: int = 0) -> tuple[Dataset, Dataset]:
    """Random disjoint partition with ceil(fraction * N) training samples."""
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must lie in (0, 1), got {train_fraction}")
    n = ds.n_samples
    n_train = int(np.ceil(train_fraction * n))
    perm = np.random.default_rng(seed).permutation(n)
    tr, te = perm[:n_train], perm[n_train:]
    return (
        Dataset(X=ds.X[tr], y=ds.y[tr], name=f"{ds.name}:train"),
        Dataset(X=ds.X[te], y=ds.y[te], name=f"{ds.name}:test"),
    )


@dataclass(frozen=True)
class FoldPlan:
    """Assignment of each of N samples to one of k cross-validation folds."""

    k: int
    assignments: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignments", np.asarray(self.assignments, dtype=int))
        counts = np.bincount(self.assignments, minlength=self.k)
        if len(np.unique(self.assignments)) != self.k or counts.max() - counts.min() > 1:
            raise ValueError("fold assignments must be balanced and cover all folds")

    def fold_indices(self, fold: int) -> tuple[np.ndarray, np.ndarray]:
        """(train indices, held-out indices) for one fold."""
        held = self.assignments == fold
        return np.flatnonzero(~held), np.flatnonzero(held)


def kfold(n_samples: int, k: int, seed: int = 0) -> FoldPlan:
    """Shuffled balanced k-fold plan; fold sizes differ by at most one."""
    if k < 2:
        raise ValueError(f"fold count must be >= 2, got {k}")
    if k > n_samples:
        raise ValueError(f"cannot make {k} folds from {n_samples} samples")
    perm = np.random.default_rng(seed).permutation(n_samples)
    assignments = np.empty(n_samples, dtype=int)
    assignments[perm] = np.arange(n_samples) % k
    return FoldPlan(k=k, assignments=assignments)
