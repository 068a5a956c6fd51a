"""Record-level categorical data and its derived tables.

A :class:`Dataset` stores records of category labels over named variables,
encoded as dense integer codes.  From it one builds composite variables
(observed joint values of several columns), contingency tables, and
plug-in joint distributions.  Everything downstream (association measures,
selection, prediction) consumes the :class:`JointDistribution` produced
here.

All estimation is plug-in: probabilities are empirical frequencies, with
no smoothing.  Categories never observed in the data do not exist as far
as this module is concerned; domains list observed labels only, in first
occurrence order, which makes every derived matrix reproducible from the
input bytes alone.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DataError, NumericDomainError

MISSING = ""
MISSING_LABEL = "NA"

#: Tolerance for probability-sum invariants on derived distributions.
PROB_ATOL = 1e-12


@dataclass(frozen=True)
class Variable:
    """A named categorical variable with an ordered domain of labels.

    The dense index of a category is its position in ``domain``.
    """

    name: str
    domain: tuple[str, ...]

    def __post_init__(self):
        if not self.domain:
            raise DataError(f"variable {self.name!r} has an empty domain")
        if len(set(self.domain)) != len(self.domain):
            raise DataError(f"variable {self.name!r} has duplicate categories")

    @property
    def size(self) -> int:
        return len(self.domain)

    def index_of(self, label: str) -> int:
        try:
            return self.domain.index(label)
        except ValueError:
            raise DataError(
                f"category {label!r} not in domain of variable {self.name!r}"
            ) from None


@dataclass(frozen=True)
class CompositeVariable:
    """The joint value of several source variables, over observed tuples only.

    ``domain`` lists the label tuples that occur in at least one record;
    ``codes`` gives each record's dense index into that domain.  Keeping
    only observed tuples bounds the domain by the record count, no matter
    how many parts the composite has.
    """

    parts: tuple[str, ...]
    domain: tuple[tuple[str, ...], ...]
    codes: np.ndarray = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return "(" + ",".join(self.parts) + ")"

    @property
    def size(self) -> int:
        return len(self.domain)


class Dataset:
    """Immutable table of categorical records.

    Parameters
    ----------
    variables : sequence of Variable
        Column definitions; order fixes the column order of ``records``.
    records : ndarray of shape (m, n)
        Dense category codes; ``records[i, j]`` indexes into
        ``variables[j].domain``.
    """

    def __init__(self, variables: Sequence[Variable], records: np.ndarray):
        variables = tuple(variables)
        records = np.asarray(records, dtype=np.int64)
        if records.ndim != 2 or records.shape[1] != len(variables):
            raise DataError("records shape does not match variable count")
        if records.shape[0] < 1:
            raise DataError("dataset needs at least one record")
        names = [v.name for v in variables]
        if len(set(names)) != len(names):
            raise DataError("duplicate variable names")
        for j, v in enumerate(variables):
            col = records[:, j]
            if col.min() < 0 or col.max() >= v.size:
                raise DataError(f"record codes out of range for {v.name!r}")
        self._variables = variables
        self._records = records
        self._records.setflags(write=False)
        self._index = {v.name: j for j, v in enumerate(variables)}

    @property
    def variables(self) -> tuple[Variable, ...]:
        return self._variables

    @property
    def records(self) -> np.ndarray:
        return self._records

    @property
    def n_records(self) -> int:
        return self._records.shape[0]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self._variables)

    def var(self, name: str) -> Variable:
        try:
            return self._variables[self._index[name]]
        except KeyError:
            raise DataError(f"unknown variable {name!r}") from None

    def position(self, name: str) -> int:
        """Column index of a variable, used for index tie-breaks."""
        if name not in self._index:
            raise DataError(f"unknown variable {name!r}")
        return self._index[name]

    def codes(self, name: str) -> np.ndarray:
        """Dense code column for one variable."""
        return self._records[:, self.position(name)]

    def labels(self, name: str) -> np.ndarray:
        """Label column for one variable (decoded)."""
        v = self.var(name)
        return np.asarray(v.domain, dtype=object)[self.codes(name)]

    def take(self, indices: np.ndarray) -> "Dataset":
        """New dataset from a record subset; domains are kept unchanged."""
        indices = np.asarray(indices)
        if indices.size == 0:
            raise DataError("record subset is empty")
        return Dataset(self._variables, self._records[indices])

    @classmethod
    def from_label_columns(cls, columns: dict[str, Sequence[str]],
                           domains: dict[str, Sequence[str]] | None = None) -> "Dataset":
        """Build a dataset from label columns.

        Domains default to first-occurrence order of the observed labels;
        pass ``domains`` to pin an explicit ordering.
        """
        if not columns:
            raise DataError("no columns given")
        variables = []
        code_cols = []
        m = None
        for name, col in columns.items():
            col = list(col)
            if m is None:
                m = len(col)
            elif len(col) != m:
                raise DataError("columns have unequal lengths")
            if domains and name in domains:
                dom = tuple(domains[name])
            else:
                dom = tuple(dict.fromkeys(col))
            lut = {lab: i for i, lab in enumerate(dom)}
            try:
                code_cols.append([lut[lab] for lab in col])
            except KeyError as e:
                raise DataError(
                    f"label {e.args[0]!r} not in pinned domain of {name!r}"
                ) from None
            variables.append(Variable(name, dom))
        return cls(variables, np.array(code_cols, dtype=np.int64).T)

    def __repr__(self):
        return f"Dataset({self.n_records} records, variables={list(self.names)})"


@dataclass(frozen=True)
class ContingencyTable:
    """Cross-classification counts of an explanatory variable against a response.

    ``x_domain`` entries are labels for a plain variable or label tuples
    for a composite; rows of ``counts`` follow ``x_domain`` and columns
    follow ``y_domain``.
    """

    x_name: str
    y_name: str
    x_domain: tuple
    y_domain: tuple[str, ...]
    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if (counts < 0).any():
            raise DataError("negative counts")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def shape(self) -> tuple[int, int]:
        return self.counts.shape


@dataclass(frozen=True)
class JointDistribution:
    """Plug-in joint distribution of (X, Y) with cached marginals.

    Invariants (checked on construction): all entries nonnegative, total
    mass 1 within ``PROB_ATOL``, and marginals equal to row/column sums.
    """

    p_xy: np.ndarray
    x_domain: tuple
    y_domain: tuple[str, ...]

    def __post_init__(self):
        p = np.asarray(self.p_xy, dtype=np.float64)
        if p.ndim != 2:
            raise DataError("p_xy must be a matrix")
        if (p < 0).any():
            raise DataError("negative probabilities")
        if abs(p.sum() - 1.0) > PROB_ATOL:
            raise DataError("joint probabilities do not sum to 1")
        p.setflags(write=False)
        object.__setattr__(self, "p_xy", p)

    @property
    def p_x(self) -> np.ndarray:
        return self.p_xy.sum(axis=1)

    @property
    def p_y(self) -> np.ndarray:
        return self.p_xy.sum(axis=0)

    @property
    def n_y(self) -> int:
        return self.p_xy.shape[1]


def ingest_records(rows: Iterable[Sequence[str]],
                   missing_policy: str = "drop_row") -> Dataset:
    """Build a dataset from a header row followed by label rows.

    Cells equal to the empty string are missing.  ``missing_policy`` is
    either ``"drop_row"`` (discard records with any missing cell) or
    ``"as_category"`` (recode missing cells as the label ``"NA"``).
    Domains are the distinct observed labels per column in first
    occurrence order, so ingestion is deterministic.
    """
    if missing_policy not in ("drop_row", "as_category"):
        raise DataError(f"unknown missing_policy {missing_policy!r}")
    it = iter(rows)
    try:
        header = [str(h) for h in next(it)]
    except StopIteration:
        raise DataError("empty input: no header row") from None
    if not header:
        raise DataError("empty header row")
    if len(set(header)) != len(header):
        raise DataError("duplicate variable names in header")

    n = len(header)
    kept: list[list[str]] = []
    for lineno, row in enumerate(it, start=2):
        row = [str(c) for c in row]
        if not row:
            continue
        if len(row) != n:
            raise DataError(
                f"row {lineno} has {len(row)} cells, expected {n}"
            )
        if any(c == MISSING for c in row):
            if missing_policy == "drop_row":
                continue
            row = [MISSING_LABEL if c == MISSING else c for c in row]
        kept.append(row)
    if not kept:
        raise DataError("no data rows after missing-value handling")

    columns = {header[j]: [row[j] for row in kept] for j in range(n)}
    return Dataset.from_label_columns(columns)


def read_csv(source: Union[str, io.TextIOBase],
             missing_policy: str = "drop_row") -> Dataset:
    """Ingest a UTF-8 CSV file: first row is the header, all cells are
    opaque category labels, empty cells are missing."""
    if isinstance(source, (str, bytes)):
        with open(source, "r", encoding="utf-8", newline="") as f:
            return ingest_records(csv.reader(f), missing_policy)
    return ingest_records(csv.reader(source), missing_policy)


def composite(ds: Dataset, names: Sequence[str],
              max_cells: int | None = None) -> CompositeVariable:
    """Observed-tuple composite of several variables.

    The domain holds only tuples that occur in the data; its size is
    bounded by both the record count and the product of part domain
    sizes.  ``max_cells`` caps the observed domain size; plug-in
    estimates over a composite whose cells are mostly singletons carry
    no information, so selection runs bound it.
    """
    names = list(names)
    if not names:
        raise DataError("composite needs at least one variable")
    if len(set(names)) != len(names):
        raise DataError("composite parts must be distinct")
    sizes = [ds.var(nm).size for nm in names]
    dense = 1
    for s in sizes:
        dense *= s

    cols = np.stack([ds.codes(nm) for nm in names], axis=1)
    if dense < 2 ** 62:
        keys = np.ravel_multi_index(cols.T, sizes)
        uniq, codes = np.unique(keys, return_inverse=True)
        idx = np.stack(np.unravel_index(uniq, sizes), axis=1)
    else:  # keys would overflow int64; group full rows instead
        idx, codes = np.unique(cols, axis=0, return_inverse=True)
    if max_cells is not None and idx.shape[0] > max_cells:
        raise DataError(
            f"composite domain cap exceeded: {idx.shape[0]} observed cells "
            f"> {max_cells} for parts {names}"
        )
    domains = [ds.var(nm).domain for nm in names]
    domain = tuple(
        tuple(domains[j][idx[i, j]] for j in range(len(names)))
        for i in range(idx.shape[0])
    )
    return CompositeVariable(tuple(names), domain, codes.astype(np.int64))


VarSpec = Union[str, Sequence[str], CompositeVariable]


def _resolve_x(ds: Dataset, x: VarSpec,
               max_cells: int | None = None) -> tuple[str, tuple, np.ndarray, tuple[str, ...]]:
    """Normalize an x-spec to (name, domain, codes, part names)."""
    if isinstance(x, CompositeVariable):
        return x.name, x.domain, x.codes, x.parts
    if isinstance(x, str):
        v = ds.var(x)
        return v.name, v.domain, ds.codes(x), (x,)
    comp = composite(ds, list(x), max_cells=max_cells)
    return comp.name, comp.domain, comp.codes, comp.parts


def contingency(ds: Dataset, x: VarSpec, y: str,
                max_cells: int | None = None) -> ContingencyTable:
    """Cross-classify X (variable or composite) against a response Y."""
    x_name, x_domain, x_codes, parts = _resolve_x(ds, x, max_cells)
    if y in parts:
        raise DataError(f"response {y!r} overlaps the explanatory parts")
    yv = ds.var(y)
    y_codes = ds.codes(y)
    nx, ny = len(x_domain), yv.size
    counts = np.bincount(x_codes * ny + y_codes, minlength=nx * ny).reshape(nx, ny)
    return ContingencyTable(x_name, y, tuple(x_domain), yv.domain, counts)


def to_joint(ct: ContingencyTable) -> JointDistribution:
    """Plug-in joint distribution from counts: every cell divided by the total."""
    total = ct.total
    if total < 1:
        raise NumericDomainError("contingency table is empty")
    return JointDistribution(ct.counts / total, ct.x_domain, ct.y_domain)


def joint_from_counts(counts, x_domain=None, y_domain=None) -> JointDistribution:
    """Convenience: plug-in joint straight from a count (or weight) matrix."""
    counts = np.asarray(counts, dtype=np.float64)
    total = counts.sum()
    if total <= 0:
        raise NumericDomainError("counts sum to zero")
    if (counts < 0).any():
        raise DataError("negative counts")
    nx, ny = counts.shape
    xd = tuple(x_domain) if x_domain is not None else tuple(str(i) for i in range(nx))
    yd = tuple(y_domain) if y_domain is not None else tuple(str(i) for i in range(ny))
    return JointDistribution(counts / total, xd, yd)


class WeightedPopulation:
    """Exact finite population: support cells with probabilities.

    Use this for analytic (infinite-sample) calculations; the
    :meth:`joint` method marginalizes to a two-way plug-in distribution
    exactly like :func:`contingency` + :func:`to_joint` would on sampled
    records.
    """

    def __init__(self, variables: Sequence[Variable], cells: np.ndarray,
                 probs: np.ndarray):
        self.variables = tuple(variables)
        self.cells = np.asarray(cells, dtype=np.int64)
        self.probs = np.asarray(probs, dtype=np.float64)
        if self.cells.ndim != 2 or self.cells.shape[1] != len(self.variables):
            raise DataError("cells shape does not match variable count")
        if abs(self.probs.sum() - 1.0) > PROB_ATOL:
            raise DataError("population probabilities do not sum to 1")
        self._index = {v.name: j for j, v in enumerate(self.variables)}

    def position(self, name: str) -> int:
        if name not in self._index:
            raise DataError(f"unknown variable {name!r}")
        return self._index[name]

    def marginal(self, name: str) -> np.ndarray:
        j = self.position(name)
        v = self.variables[j]
        out = np.zeros(v.size)
        np.add.at(out, self.cells[:, j], self.probs)
        return out

    def joint(self, xs: Sequence[str], y: str) -> JointDistribution:
        """Exact two-way joint of the composite of ``xs`` against ``y``."""
        xs = [xs] if isinstance(xs, str) else list(xs)
        if y in xs:
            raise DataError(f"response {y!r} overlaps the explanatory parts")
        xcols = self.cells[:, [self.position(nm) for nm in xs]]
        yj = self.position(y)
        keys, codes = np.unique(
            [tuple(row) for row in xcols.tolist()], axis=0, return_inverse=True
        )
        yv = self.variables[yj]
        p = np.zeros((len(keys), yv.size))
        np.add.at(p, (codes, self.cells[:, yj]), self.probs)
        domains = [self.variables[self.position(nm)].domain for nm in xs]
        x_domain = tuple(
            tuple(domains[j][keys[i, j]] for j in range(len(xs)))
            for i in range(len(keys))
        )
        mass = p.sum()
        return JointDistribution(p / mass, x_domain, yv.domain)
