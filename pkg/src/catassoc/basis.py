"""Structural basis discovery without a response variable.

The concentration functional Ep of a (possibly joint) variable is the
sum of squared cell probabilities.  It never increases when variables
are added to a composite, and it stops decreasing exactly when the
variables already present determine everything else.  That gives a
response-free selection procedure: grow a composite by always adding the
variable that minimizes Ep, stop when no candidate lowers it, then drop
members whose removal leaves Ep unchanged.  The surviving set is a
structural basis: every variable in the dataset is a deterministic
function of it, so all conditional probabilities given a basis cell are
0 or 1, and no proper subset has that property.

Intended for deterministic or administrative data; under sampling noise
exact functional dependence is rare and the ``eps`` tolerance must be
chosen by the caller.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .association import gk_tau_direct
from .dataset import Dataset, composite, joint_from_counts
from .errors import DataError
from .selection import ForwardStep, SelectionTrace

#: Default tolerance for Ep comparisons on exact data.
DEFAULT_EPS = 1e-12


@dataclass(frozen=True)
class EpValue:
    """Concentration of a composite: sum of squared cell probabilities.

    Bounded below by the reciprocal of the observed domain size (equality
    iff the composite is uniform) and above by 1.
    """

    value: float
    vars: tuple[str, ...]


@dataclass(frozen=True)
class BasisReport:
    """Verification results for a claimed structural basis."""

    basis: tuple[str, ...]
    determined: dict[str, bool]
    subsets_ok: bool
    conditionals_01: bool
    minimal: bool

    @property
    def passed(self) -> bool:
        return (all(self.determined.values()) and self.subsets_ok
                and self.conditionals_01 and self.minimal)


def ep(ds: Dataset, vars: Sequence[str],
       max_cells: int | None = None) -> EpValue:
    """Sum of squared plug-in probabilities over the observed cells of a
    composite."""
    vars = [vars] if isinstance(vars, str) else list(vars)
    if not vars:
        raise DataError("ep needs at least one variable")
    comp = composite(ds, vars, max_cells=max_cells)
    counts = np.bincount(comp.codes, minlength=comp.size)
    p = counts / ds.n_records
    return EpValue(float(p @ p), tuple(vars))


def _codes_joint(x_codes: np.ndarray, nx: int, y_codes: np.ndarray, ny: int):
    counts = np.bincount(x_codes * ny + y_codes, minlength=nx * ny).reshape(nx, ny)
    return joint_from_counts(counts)


def _cond_table(ds: Dataset, basis: Sequence[str], name: str,
                max_cells: int | None) -> np.ndarray:
    comp = composite(ds, list(basis), max_cells=max_cells)
    y = ds.codes(name)
    ny = ds.var(name).size
    counts = np.bincount(comp.codes * ny + y, minlength=comp.size * ny)
    counts = counts.reshape(comp.size, ny).astype(float)
    rows = counts.sum(axis=1, keepdims=True)
    return counts / rows


def structural_basis(ds: Dataset, eps: float = DEFAULT_EPS,
                     max_cells: int | None = None,
                     threads: int = 1) -> SelectionTrace:
    """Forward-backward search for a minimal determining variable set.

    Forward: add the variable minimizing the composite's Ep (ties broken
    by smaller resulting Ep, then smaller single-variable domain, then
    smaller column index); stop when no candidate decreases Ep by more
    than ``eps``.  Backward: in reverse pick order, drop variables whose
    removal leaves Ep within ``eps``.
    """
    if eps < 0:
        raise DataError("eps must be nonnegative")
    names = list(ds.names)
    if not names:
        raise DataError("dataset has no variables")
    if max_cells is None:
        max_cells = 10 * ds.n_records

    def ep_of(vars: list[str]) -> float:
        return ep(ds, vars, max_cells=max_cells).value

    def score_all(chosen: list[str], cands: list[str]) -> dict[str, float]:
        if threads > 1 and len(cands) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                vals = list(pool.map(lambda c: ep_of(chosen + [c]), cands))
            return dict(zip(cands, vals))
        return {c: ep_of(chosen + [c]) for c in cands}

    chosen: list[str] = []
    steps: list[ForwardStep] = []
    current = 1.0  # Ep of the empty composite: all mass in one cell
    remaining = list(names)
    while remaining:
        scores = score_all(chosen, remaining)
        best_val = min(scores.values())
        tied = [c for c in remaining if scores[c] == best_val]
        pick = min(tied, key=lambda nm: (ds.var(nm).size, ds.position(nm)))
        if chosen and current - best_val <= eps:
            break
        chosen.append(pick)
        remaining.remove(pick)
        steps.append(ForwardStep(pick, best_val, scores))
        current = best_val

    kept = list(chosen)
    pruned: list[str] = []
    for v in reversed(chosen):
        if len(kept) <= 1:
            break
        trial = [nm for nm in kept if nm != v]
        val = ep_of(trial)
        if abs(val - current) <= eps:
            kept = trial
            pruned.append(v)
            current = val

    return SelectionTrace(tuple(steps), tuple(pruned), tuple(kept), current,
                          metric="ep")


def _determines(ds: Dataset, basis: Sequence[str], name: str,
                eps: float, max_cells: int | None) -> bool:
    """True when ``name`` is a deterministic function of the basis cells."""
    if ds.var(name).size < 2:
        return True  # constant variables are determined by anything
    comp = composite(ds, list(basis), max_cells=max_cells)
    j = _codes_joint(comp.codes, comp.size, ds.codes(name), ds.var(name).size)
    return gk_tau_direct(j) >= 1.0 - eps


def verify_basis(ds: Dataset, basis: Sequence[str], eps: float = 1e-9,
                 subset_samples: int = 32, seed: int = 0,
                 max_cells: int | None = None) -> BasisReport:
    """Check the defining properties of a structural basis.

    (a) every variable is completely determined by the basis composite;
    (b) a sample of random variable subsets is, as a composite, also
        completely determined (spot check of the closure property);
    (c) every conditional probability given a basis cell is 0 or 1;
    (d) minimality: removing any single member breaks (a).
    """
    basis = list(basis)
    if not basis:
        raise DataError("empty basis")
    for nm in basis:
        ds.var(nm)
    if max_cells is None:
        max_cells = 10 * ds.n_records
    names = list(ds.names)

    determined = {nm: _determines(ds, basis, nm, eps, max_cells) for nm in names}

    # (b) random subsets as composite responses
    rng = np.random.default_rng(seed)
    others = [nm for nm in names]
    subsets_ok = True
    n_sub = min(subset_samples, 2 ** len(others) - 1)
    comp_b = composite(ds, basis, max_cells=max_cells)
    for _ in range(n_sub):
        k = int(rng.integers(1, len(others) + 1))
        pick = sorted(rng.choice(len(others), size=k, replace=False).tolist())
        sub = [others[i] for i in pick]
        comp_s = composite(ds, sub, max_cells=max_cells)
        if comp_s.size < 2:
            continue
        j = _codes_joint(comp_b.codes, comp_b.size, comp_s.codes, comp_s.size)
        if gk_tau_direct(j) < 1.0 - eps:
            subsets_ok = False
            break

    # (c) all conditionals 0/1
    conditionals_01 = True
    for nm in names:
        cond = _cond_table(ds, basis, nm, max_cells)
        if not np.all((cond <= eps) | (cond >= 1.0 - eps)):
            conditionals_01 = False
            break

    # (d) minimality
    if len(basis) == 1:
        minimal = any(ds.var(nm).size > 1 for nm in names)
    else:
        minimal = True
        for v in basis:
            reduced = [nm for nm in basis if nm != v]
            if all(_determines(ds, reduced, nm, eps, max_cells) for nm in names):
                minimal = False
                break

    return BasisReport(tuple(basis), determined, subsets_ok, conditionals_01, minimal)


def minimal_basis(ds: Dataset, eps: float = DEFAULT_EPS,
                  max_cells: int | None = None) -> tuple[str, ...]:
    """Exhaustive search for a smallest determining subset.

    Exponential in the variable count; refused above 20 variables.  The
    greedy :func:`structural_basis` is the default deliverable; this
    exists for when a provably smallest basis matters.
    """
    names = list(ds.names)
    if len(names) > 20:
        raise DataError("exhaustive basis search is limited to 20 variables")
    if max_cells is None:
        max_cells = 10 * ds.n_records
    full = ep(ds, names, max_cells=max_cells).value
    for k in range(1, len(names) + 1):
        for sub in itertools.combinations(names, k):
            if abs(ep(ds, list(sub), max_cells=max_cells).value - full) <= eps:
                return tuple(sub)
    return tuple(names)
