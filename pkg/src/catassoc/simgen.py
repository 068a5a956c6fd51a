"""Synthetic categorical data generators with exact population oracles.

The flagship generator is a two-test disease-screening model: a
three-valued outcome Y (healthy / common strain / severe strain) driven
by two dependent binary tests X1 and X2, plus three derived columns that
carry no information beyond (X1, X2):

* R3, R4 -- degraded one-sided copies of X1 and X2: a positive parent
  registers with probability ``carry_prob``, a negative parent never
  registers;
* S5 -- the conjunction of both tests thinned by an independent
  Bernoulli coin, so it flags exactly the high-risk joint state.

:func:`population_joint_flu` materializes the model's exact distribution
over all six columns, which lets tests compare sampled estimates against
closed-form population values.  :func:`sample_joint` draws records from
any two-way joint distribution; it backs the split-validation study at
scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import (
    ContingencyTable,
    Dataset,
    JointDistribution,
    Variable,
    WeightedPopulation,
    to_joint,
)
from .errors import DataError

_CELLS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class FluSpec:
    """Parameters of the screening model.

    ``p_x1x2`` gives the probability of each (X1, X2) state in the order
    (0,0), (0,1), (1,0), (1,1); ``cond_y`` the conditional distribution
    of Y per state, in the same order.  ``carry_prob`` is the chance a
    positive parent carries through to its degraded copy; ``z_prob`` the
    thinning coin for the conjunction column.
    """

    p_x1x2: tuple[float, ...] = (9 / 16, 3 / 16, 3 / 16, 1 / 16)
    cond_y: tuple[tuple[float, ...], ...] = (
        (0.95, 0.05, 0.00),
        (0.50, 0.50, 0.00),
        (0.30, 0.70, 0.00),
        (0.00, 0.05, 0.95),
    )
    carry_prob: float = 0.90
    z_prob: float = 0.80

    def __post_init__(self):
        if abs(sum(self.p_x1x2) - 1.0) > 1e-12:
            raise DataError("p_x1x2 must sum to 1")
        for row in self.cond_y:
            if abs(sum(row) - 1.0) > 1e-12:
                raise DataError("every conditional row of cond_y must sum to 1")


DEFAULT_FLU = FluSpec()

_FLU_COLUMNS = ("Y", "X1", "X2", "R3", "R4", "S5")


def _flu_variables() -> tuple[Variable, ...]:
    return (
        Variable("Y", ("0", "1", "2")),
        Variable("X1", ("0", "1")),
        Variable("X2", ("0", "1")),
        Variable("R3", ("0", "1")),
        Variable("R4", ("0", "1")),
        Variable("S5", ("0", "1")),
    )


def gen_flu(n: int, seed: int, spec: FluSpec = DEFAULT_FLU) -> Dataset:
    """Sample ``n`` records from the screening model.

    Column order is Y, X1, X2, R3, R4, S5 with pinned domains, so the
    category indexing never depends on the seed.
    """
    if n < 1:
        raise DataError("n must be at least 1")
    rng = np.random.default_rng(seed)
    cell = _draw_categorical(np.asarray(spec.p_x1x2), rng.random(n))
    x1 = np.asarray([c[0] for c in _CELLS])[cell]
    x2 = np.asarray([c[1] for c in _CELLS])[cell]
    cond = np.asarray(spec.cond_y)
    cdf = np.cumsum(cond, axis=1)
    cdf[:, -1] = 1.0
    # >= keeps u = 0.0 from landing behind a flat zero-probability prefix
    y = (rng.random(n)[:, None] >= cdf[cell]).sum(axis=1)
    r3 = np.where(x1 == 1, (rng.random(n) < spec.carry_prob).astype(int), 0)
    r4 = np.where(x2 == 1, (rng.random(n) < spec.carry_prob).astype(int), 0)
    z = (rng.random(n) < spec.z_prob).astype(int)
    s5 = x1 * x2 * z
    records = np.stack([y, x1, x2, r3, r4, s5], axis=1)
    return Dataset(_flu_variables(), records)


def _draw_categorical(p: np.ndarray, u: np.ndarray) -> np.ndarray:
    cdf = np.cumsum(p)
    cdf[-1] = 1.0
    return np.searchsorted(cdf, u, side="right")


def population_joint_flu(spec: FluSpec = DEFAULT_FLU) -> WeightedPopulation:
    """Exact joint distribution of (Y, X1, X2, R3, R4, S5).

    Enumerates the full product support and multiplies the factorized
    probabilities; zero-mass cells are dropped.
    """
    cond = np.asarray(spec.cond_y)
    cells = []
    probs = []
    for ci, (x1, x2) in enumerate(_CELLS):
        p_cell = spec.p_x1x2[ci]
        for y in range(3):
            p_y = cond[ci, y]
            if p_y == 0:
                continue
            for r3 in (0, 1):
                p_r3 = ((spec.carry_prob if r3 else 1 - spec.carry_prob)
                        if x1 == 1 else (0.0 if r3 else 1.0))
                if p_r3 == 0:
                    continue
                for r4 in (0, 1):
                    p_r4 = ((spec.carry_prob if r4 else 1 - spec.carry_prob)
                            if x2 == 1 else (0.0 if r4 else 1.0))
                    if p_r4 == 0:
                        continue
                    for s5 in (0, 1):
                        p_s5 = ((spec.z_prob if s5 else 1 - spec.z_prob)
                                if x1 == 1 and x2 == 1 else (0.0 if s5 else 1.0))
                        if p_s5 == 0:
                            continue
                        cells.append((y, x1, x2, r3, r4, s5))
                        probs.append(p_cell * p_y * p_r3 * p_r4 * p_s5)
    return WeightedPopulation(_flu_variables(), np.array(cells), np.array(probs))


def sample_joint(j: JointDistribution | ContingencyTable, n: int, seed: int,
                 x_name: str = "X", y_name: str = "Y") -> Dataset:
    """Draw ``n`` records from a two-way joint distribution.

    Cell probabilities are flattened and sampled by inverse CDF; the
    resulting dataset has two columns with the joint's domains pinned,
    so the coding is seed-independent.  Composite x-categories become
    single labels joined by ``|``.
    """
    if n < 1:
        raise DataError("n must be at least 1")
    if isinstance(j, ContingencyTable):
        j = to_joint(j)
    rng = np.random.default_rng(seed)
    flat = j.p_xy.ravel()
    idx = _draw_categorical(flat, rng.random(n))
    xi, yi = np.unravel_index(idx, j.p_xy.shape)
    x_labels = tuple(
        "|".join(map(str, d)) if isinstance(d, tuple) else str(d)
        for d in j.x_domain
    )
    variables = (Variable(x_name, x_labels), Variable(y_name, tuple(j.y_domain)))
    return Dataset(variables, np.stack([xi, yi], axis=1))


def add_independent_noise(ds: Dataset, k: int, n_categories: int,
                          seed: int, prefix: str = "N") -> Dataset:
    """Append ``k`` independent uniform categorical columns to a dataset.

    Used to stress feature selection: the new columns carry no
    information about anything and must never enter a selected basis.
    """
    if k < 1:
        raise DataError("k must be at least 1")
    rng = np.random.default_rng(seed)
    m = ds.n_records
    new_vars = list(ds.variables)
    new_cols = [ds.records]
    for i in range(k):
        name = f"{prefix}{i + 1}"
        if name in ds.names:
            raise DataError(f"variable {name!r} already exists")
        new_vars.append(Variable(name, tuple(str(c) for c in range(n_categories))))
        new_cols.append(rng.integers(0, n_categories, size=(m, 1)))
    return Dataset(new_vars, np.hstack(new_cols))
