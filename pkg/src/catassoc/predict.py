"""Proportional prediction and split-sample validation.

A proportional predictor draws the predicted category from the
conditional distribution of the response given the observed explanatory
value (conditional Monte Carlo), rather than always answering with the
conditional mode.  Its expected confusion matrix equals the association
matrix, which is what :func:`split_validate` demonstrates empirically:
fit the matrix on a training split, predict proportionally on the test
split, and compare the tallied confusion rates against the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .association import AssociationMatrix, association_matrix
from .dataset import (
    ContingencyTable,
    Dataset,
    JointDistribution,
    _resolve_x,
    joint_from_counts,
    to_joint,
)
from .errors import DataError

JointLike = JointDistribution | ContingencyTable


@dataclass(frozen=True)
class ConfusionMatrix:
    """Prediction tallies by true category (rows) and predicted category
    (columns), plus row-normalized rates."""

    counts: np.ndarray
    y_domain: tuple[str, ...]

    def __post_init__(self):
        c = np.asarray(self.counts, dtype=np.int64)
        c.setflags(write=False)
        object.__setattr__(self, "counts", c)

    @property
    def normalized(self) -> np.ndarray:
        rows = self.counts.sum(axis=1, keepdims=True)
        safe = np.where(rows > 0, rows, 1)
        return self.counts / safe


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of a train/test proportional-prediction check."""

    train_gamma: AssociationMatrix
    test_confusion: ConfusionMatrix
    max_abs_diff: float
    n_train: int
    n_test: int
    skipped_unseen: int
    seed: int


def _as_joint(j: JointLike) -> JointDistribution:
    return to_joint(j) if isinstance(j, ContingencyTable) else j


def proportional_predict(j: JointLike, x_value, rng: np.random.Generator) -> str:
    """Draw one predicted response category for an observed X value.

    The prediction is sampled from the conditional distribution of the
    response given ``x_value``; degenerate conditionals therefore always
    return the determined category.
    """
    j = _as_joint(j)
    try:
        i = j.x_domain.index(x_value)
    except ValueError:
        raise DataError(f"unseen explanatory value {x_value!r}") from None
    row = j.p_xy[i]
    mass = row.sum()
    if mass <= 0:
        raise DataError(f"unseen explanatory value {x_value!r}")
    t = _draw(row / mass, rng.random(1))[0]
    return j.y_domain[t]


def _draw(cond: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Inverse-CDF draws from one conditional distribution."""
    cdf = np.cumsum(cond)
    cdf[-1] = 1.0
    return np.searchsorted(cdf, u, side="right")


def _draw_rows(cond: np.ndarray, rows: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Vectorized inverse-CDF draws, one per entry of ``rows``.

    Uses ``>=`` so that u = 0.0 can never select a zero-probability
    category behind a flat CDF prefix.
    """
    cdf = np.cumsum(cond, axis=1)
    cdf[:, -1] = 1.0
    u = rng.random(rows.shape[0])
    return (u[:, None] >= cdf[rows]).sum(axis=1)


def split_validate(ds: Dataset, x, y: str, train_frac: float = 0.8,
                   seed: int = 0, stratify: bool = False) -> ValidationResult:
    """Compare the training association matrix with a test confusion matrix.

    Records are split uniformly at random (optionally stratified by the
    response).  The association matrix is fitted on the training share;
    every test record then gets one proportional prediction from the
    training conditionals, tallied by its true category.  Test records
    whose explanatory value never occurs in training cannot be predicted
    and are skipped (counted in ``skipped_unseen``).  ``max_abs_diff``
    compares matrix entries over test rows with at least one record.
    """
    if not 0.0 < train_frac < 1.0:
        raise DataError("train_frac must be strictly between 0 and 1")
    m = ds.n_records
    n_train = int(round(train_frac * m))
    if n_train < 1 or n_train >= m:
        raise DataError("split leaves an empty train or test set")

    rng = np.random.default_rng(seed)
    if stratify:
        y_codes_all = ds.codes(y)
        train_idx, test_idx = [], []
        for cat in range(ds.var(y).size):
            members = np.flatnonzero(y_codes_all == cat)
            members = members[rng.permutation(members.size)]
            k = int(round(train_frac * members.size))
            train_idx.append(members[:k])
            test_idx.append(members[k:])
        train_idx = np.concatenate(train_idx)
        test_idx = np.concatenate(test_idx)
        if train_idx.size < 1 or test_idx.size < 1:
            raise DataError("split leaves an empty train or test set")
    else:
        perm = rng.permutation(m)
        train_idx, test_idx = perm[:n_train], perm[n_train:]

    x_name, x_domain, x_codes, parts = _resolve_x(ds, x)
    if y in parts:
        raise DataError(f"response {y!r} overlaps the explanatory parts")
    y_codes = ds.codes(y)
    ny = ds.var(y).size
    nx = len(x_domain)

    counts_train = np.bincount(
        x_codes[train_idx] * ny + y_codes[train_idx], minlength=nx * ny
    ).reshape(nx, ny)
    if (counts_train.sum(axis=0) == 0).any():
        raise DataError("a response category is absent from the training split")
    train_gamma = association_matrix(joint_from_counts(counts_train, x_domain,
                                                       ds.var(y).domain))

    row_mass = counts_train.sum(axis=1)
    seen = row_mass > 0
    cond = np.zeros_like(counts_train, dtype=float)
    cond[seen] = counts_train[seen] / row_mass[seen, None]

    tx = x_codes[test_idx]
    ty = y_codes[test_idx]
    usable = seen[tx]
    skipped = int((~usable).sum())
    preds = _draw_rows(cond, tx[usable], rng)
    confusion = np.bincount(ty[usable] * ny + preds, minlength=ny * ny).reshape(ny, ny)
    cm = ConfusionMatrix(confusion, ds.var(y).domain)

    occupied = confusion.sum(axis=1) > 0
    diff = np.abs(train_gamma.gamma[occupied] - cm.normalized[occupied])
    max_abs_diff = float(diff.max()) if diff.size else 0.0

    return ValidationResult(train_gamma, cm, max_abs_diff,
                            int(train_idx.size), int(test_idx.size), skipped, seed)
