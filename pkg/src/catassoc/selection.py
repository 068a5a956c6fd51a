"""Greedy forward-backward feature selection for a categorical response.

The forward pass grows a set of explanatory variables, at each step
adding the candidate that maximizes the weighted association degree of
the response given the composite of the chosen set.  Adding a variable
can never decrease that degree, so the pass stops once the best
remaining improvement falls at or below ``eps_gain``.  The backward pass
then deletes, in reverse pick order, any variable whose removal changes
the degree by at most ``eps_gain``.  What remains reproduces the
association of the full variable set up to ``eps_gain`` and is minimal
in the same sense.

Ties in the forward pass are broken by smaller single-variable domain
size, then by smaller column index, which makes the whole procedure
deterministic.  Candidate scoring within a step is independent and may
be evaluated by a thread pool; results are merged by a fixed sort key so
thread count never changes the outcome.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .association import WeightVector, association_vector, make_weights, tau
from .dataset import Dataset, contingency, to_joint
from .errors import DataError

#: Default improvement threshold on exact (non-sampled) data.
DEFAULT_EPS_GAIN = 1e-9


@dataclass(frozen=True)
class ForwardStep:
    """One forward pick: the variable chosen, the objective after adding
    it, and the objective each candidate would have produced."""

    variable: str
    value: float
    scores: dict[str, float] = field(repr=False)


@dataclass(frozen=True)
class SelectionTrace:
    """Full record of a greedy selection run.

    ``forward_steps`` values are non-decreasing for association-based
    selection (non-increasing for the concentration-based structural
    search, which reuses this type with ``metric="ep"``).
    ``basis`` is the forward picks minus the pruned variables, in pick
    order.
    """

    forward_steps: tuple[ForwardStep, ...]
    pruned: tuple[str, ...]
    basis: tuple[str, ...]
    final: float
    metric: str = "tau"

    @property
    def picked(self) -> tuple[str, ...]:
        return tuple(s.variable for s in self.forward_steps)


def y_marginal(ds: Dataset, y: str) -> np.ndarray:
    """Plug-in marginal distribution of one variable."""
    counts = np.bincount(ds.codes(y), minlength=ds.var(y).size)
    return counts / ds.n_records


def _resolve_weights(ds: Dataset, y: str, alpha) -> WeightVector:
    """Weight vector for the response, fixed once so every candidate set
    is scored on the same scale."""
    if isinstance(alpha, WeightVector):
        return alpha
    scheme = "gk" if alpha is None else alpha
    return make_weights(scheme, p_y=y_marginal(ds, y))


def tau_joint(ds: Dataset, y: str, xs: Sequence[str],
              alpha: WeightVector | str | None = None,
              max_cells: int | None = None) -> float:
    """Association degree of the response given the composite of ``xs``."""
    xs = [xs] if isinstance(xs, str) else list(xs)
    if not xs:
        raise DataError("tau_joint needs at least one explanatory variable")
    if y in xs:
        raise DataError(f"response {y!r} appears among the explanatory variables")
    w = _resolve_weights(ds, y, alpha)
    j = to_joint(contingency(ds, xs, y, max_cells=max_cells))
    return tau(association_vector(j), w)


def first_pick_tiebreak(ds: Dataset, candidates: Sequence[str]) -> str:
    """Among candidates with equal scores, prefer the smallest domain,
    then the smallest column index."""
    if not candidates:
        raise DataError("empty tie set")
    return min(candidates, key=lambda nm: (ds.var(nm).size, ds.position(nm)))


def select_basis(ds: Dataset, y: str,
                 alpha: WeightVector | str | None = None,
                 eps_gain: float = DEFAULT_EPS_GAIN,
                 max_cells: int | None = None,
                 threads: int = 1) -> SelectionTrace:
    """Forward-backward search for a minimal variable set whose composite
    carries the full set's association with the response.

    ``eps_gain`` is the smallest improvement (forward) or largest
    tolerated change (backward) treated as real; raise it on sampled
    data where plug-in estimates carry noise.  ``max_cells`` caps the
    observed composite domain (default: 10x the record count).
    """
    if eps_gain < 0:
        raise DataError("eps_gain must be nonnegative")
    ds.var(y)
    explanatory = [nm for nm in ds.names if nm != y]
    if not explanatory:
        raise DataError("no explanatory variables")
    if max_cells is None:
        max_cells = 10 * ds.n_records
    weights = _resolve_weights(ds, y, alpha)

    def score_with(chosen: list[str], cand: str) -> float:
        return tau_joint(ds, y, chosen + [cand], alpha=weights, max_cells=max_cells)

    def score_all(chosen: list[str], cands: list[str]) -> dict[str, float]:
        if threads > 1 and len(cands) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                vals = list(pool.map(lambda c: score_with(chosen, c), cands))
            return dict(zip(cands, vals))
        return {c: score_with(chosen, c) for c in cands}

    chosen: list[str] = []
    steps: list[ForwardStep] = []
    current = 0.0  # degree of the empty composite
    remaining = list(explanatory)
    while remaining:
        scores = score_all(chosen, remaining)
        best_val = max(scores.values())
        tied = [c for c in remaining if scores[c] == best_val]
        pick = first_pick_tiebreak(ds, tied)
        if chosen and best_val - current <= eps_gain:
            break
        chosen.append(pick)
        remaining.remove(pick)
        steps.append(ForwardStep(pick, best_val, scores))
        current = best_val

    # Backward: drop anything whose removal barely moves the degree.
    kept = list(chosen)
    pruned: list[str] = []
    for v in reversed(chosen):
        if len(kept) <= 1:
            break
        trial = [nm for nm in kept if nm != v]
        val = tau_joint(ds, y, trial, alpha=weights, max_cells=max_cells)
        if abs(current - val) <= eps_gain:
            kept = trial
            pruned.append(v)
            current = val

    return SelectionTrace(tuple(steps), tuple(pruned), tuple(kept), current,
                          metric="tau")
