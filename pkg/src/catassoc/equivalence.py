"""Nested equivalence relations between explanatory variables.

Two explanatory variables can be interchangeable with respect to a
response at five successively weaker levels:

* level 1: the variables determine each other completely and either one
  determines the response;
* level 2: each variable determines the response completely;
* level 3: equal association matrices;
* level 4: equal association vectors;
* level 5: equal weighted association degrees for a given weight vector.

Each level implies the next, and for a binary response levels 3-5
coincide.  Comparisons are tolerance-based by default (the float route)
but can be made exact on integer-count data via ``exact=True``, which is
what the hierarchy property tests use.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exact as _exact
from .association import (
    WeightVector,
    association_matrix,
    association_vector,
    gk_tau_direct,
    make_weights,
    tau,
)
from .dataset import Dataset, contingency, to_joint
from .errors import DataError, NumericDomainError

#: Default tolerance for equality of association quantities.
DEFAULT_TOL = 1e-9

LEVELS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class EquivalenceReport:
    """Which equivalence levels hold for one variable pair.

    ``levels[i]`` is the verdict for level ``i`` (keys 1..5);
    ``strongest`` is the smallest level that holds, or ``None``.
    ``details`` carries the measured quantities behind each verdict.
    """

    x1: str
    x2: str
    y: str
    levels: dict[int, bool]
    strongest: int | None
    tol: float
    details: dict[str, float]


def _tau_of(ds: Dataset, x: str, y: str) -> float:
    return gk_tau_direct(to_joint(contingency(ds, x, y)))


def e2prime(ds: Dataset, x1: str, x2: str, tol: float = DEFAULT_TOL) -> bool:
    """Mutual complete determination of two variables.

    True when each variable predicts the other perfectly, i.e. both
    cross-variable association degrees are 1 within ``tol``.  Sits
    between levels 1 and 3 in the hierarchy.
    """
    if x1 == x2:
        raise DataError("e2prime needs two distinct variables")
    return (_tau_of(ds, x2, x1) >= 1.0 - tol) and (_tau_of(ds, x1, x2) >= 1.0 - tol)


def equivalence_levels(ds: Dataset, x1: str, x2: str, y: str,
                       alpha: WeightVector | None = None,
                       tol: float = DEFAULT_TOL,
                       exact: bool = False) -> EquivalenceReport:
    """Evaluate all five equivalence levels for a pair of explanatory variables.

    ``alpha`` parameterizes level 5 and defaults to the Gini-share
    weights of the response.  With ``exact=True`` all comparisons are
    performed in rational arithmetic at tolerance zero (level 5 then
    always uses the exact Gini-share weights).
    """
    if len({x1, x2, y}) != 3:
        raise DataError("x1, x2, y must be three distinct variables")
    for nm in (x1, x2, y):
        ds.var(nm)

    if exact:
        return _equivalence_levels_exact(ds, x1, x2, y)

    j1 = to_joint(contingency(ds, x1, y))
    j2 = to_joint(contingency(ds, x2, y))

    tau_y_x1 = gk_tau_direct(j1)
    tau_y_x2 = gk_tau_direct(j2)
    tau_x1_x2 = _tau_of(ds, x2, x1)  # response x1 given x2
    tau_x2_x1 = _tau_of(ds, x1, x2)

    g1 = association_matrix(j1).gamma
    g2 = association_matrix(j2).gamma
    th1 = association_vector(j1)
    th2 = association_vector(j2)

    if alpha is None:
        alpha = make_weights("gk", p_y=j1.p_y)
    if not alpha.regular:
        raise NumericDomainError("level-5 comparison needs a regular weight vector")
    t1 = tau(th1, alpha)
    t2 = tau(th2, alpha)

    near1 = lambda v: v >= 1.0 - tol
    levels = {
        1: near1(tau_x1_x2) and near1(tau_x2_x1) and near1(tau_y_x1),
        2: near1(tau_y_x1) and near1(tau_y_x2),
        3: bool(np.max(np.abs(g1 - g2)) <= tol),
        4: bool(np.max(np.abs(th1.theta - th2.theta)) <= tol),
        5: abs(t1 - t2) <= tol,
    }
    details = {
        "tau_y_x1": tau_y_x1, "tau_y_x2": tau_y_x2,
        "tau_x1_x2": tau_x1_x2, "tau_x2_x1": tau_x2_x1,
        "max_gamma_diff": float(np.max(np.abs(g1 - g2))),
        "max_theta_diff": float(np.max(np.abs(th1.theta - th2.theta))),
        "tau_alpha_x1": t1, "tau_alpha_x2": t2,
    }
    strongest = next((i for i in LEVELS if levels[i]), None)
    return EquivalenceReport(x1, x2, y, levels, strongest, tol, details)


def _equivalence_levels_exact(ds: Dataset, x1: str, x2: str, y: str) -> EquivalenceReport:
    c1 = contingency(ds, x1, y).counts
    c2 = contingency(ds, x2, y).counts
    c12 = contingency(ds, x2, x1).counts  # response x1 given x2
    c21 = contingency(ds, x1, x2).counts

    tau_y_x1 = _exact.tau_exact(c1)
    tau_y_x2 = _exact.tau_exact(c2)
    tau_x1_x2 = _exact.tau_exact(c12)
    tau_x2_x1 = _exact.tau_exact(c21)

    g1 = _exact.gamma_exact(c1)
    g2 = _exact.gamma_exact(c2)
    th1 = _exact.theta_exact(c1)
    th2 = _exact.theta_exact(c2)

    levels = {
        1: tau_x1_x2 == 1 and tau_x2_x1 == 1 and tau_y_x1 == 1,
        2: tau_y_x1 == 1 and tau_y_x2 == 1,
        3: g1 == g2,
        4: th1 == th2,
        5: tau_y_x1 == tau_y_x2,
    }
    details = {
        "tau_y_x1": float(tau_y_x1), "tau_y_x2": float(tau_y_x2),
        "tau_x1_x2": float(tau_x1_x2), "tau_x2_x1": float(tau_x2_x1),
        "max_gamma_diff": float(max(abs(a - b) for ra, rb in zip(g1, g2)
                                    for a, b in zip(ra, rb))),
        "max_theta_diff": float(max(abs(a - b) for a, b in zip(th1, th2))),
        "tau_alpha_x1": float(tau_y_x1), "tau_alpha_x2": float(tau_y_x2),
    }
    strongest = next((i for i in LEVELS if levels[i]), None)
    return EquivalenceReport(x1, x2, y, levels, strongest, 0.0, details)
