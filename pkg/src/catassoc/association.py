"""Proportional association measures between categorical variables.

Given the joint distribution of an explanatory variable X and a response
Y, this module computes:

* the association matrix: the row-stochastic matrix whose (s, t) entry
  is the probability of predicting ``Y = t`` when the truth is ``Y = s``
  under proportional prediction (sampling from the conditional
  distribution of Y given X);
* the association vector: the normalized diagonal of that matrix, one
  expected accuracy-lift rate per response category;
* weighted global association degrees: convex combinations of the
  vector's components under a caller-chosen weight vector, of which the
  classical Goodman-Kruskal tau is the special case weighted by each
  category's share of the response's Gini variation.

The direct Goodman-Kruskal tau (:func:`gk_tau_direct`) is computed from
its own closed form and serves as an independent cross-check of the
vector route; the two agree to near machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .dataset import ContingencyTable, JointDistribution, to_joint
from .errors import DataError, NumericDomainError

#: Default tolerance for algebraic identities checked in tests.
IDENTITY_ATOL = 1e-12
#: Default tolerance when matching 4-decimal reference prints.
PRINT_ATOL = 5e-4

JointLike = Union[JointDistribution, ContingencyTable]

WEIGHT_SCHEMES = ("gk", "ew", "ipw")
_SCHEME_ALIASES = {"equal": "ew", "ew": "ew", "gk": "gk", "ipw": "ipw"}


@dataclass(frozen=True)
class AssociationMatrix:
    """Row-stochastic matrix of proportional prediction rates.

    Row s gives the distribution of predicted categories when the true
    category is s; the diagonal is the per-category expected accuracy.
    """

    gamma: np.ndarray
    y_domain: tuple[str, ...]

    def __post_init__(self):
        g = np.asarray(self.gamma, dtype=np.float64)
        g.setflags(write=False)
        object.__setattr__(self, "gamma", g)

    @property
    def n_y(self) -> int:
        return self.gamma.shape[0]


@dataclass(frozen=True)
class AssociationVector:
    """Per-category accuracy lift of predicting with X over the Y marginal.

    Components live in [0, 1]: 0 when the category is independent of X,
    1 when X determines membership in the category exactly.
    """

    theta: np.ndarray
    y_domain: tuple[str, ...]

    def __post_init__(self):
        t = np.asarray(self.theta, dtype=np.float64)
        t.setflags(write=False)
        object.__setattr__(self, "theta", t)

    @property
    def n_y(self) -> int:
        return self.theta.shape[0]


@dataclass(frozen=True)
class WeightVector:
    """Normalized nonnegative weights over response categories.

    ``regular`` is true when every component is strictly positive, the
    condition under which a weighted association degree of 0 or 1
    characterizes independence or complete determination.
    """

    alpha: np.ndarray
    regular: bool

    def __post_init__(self):
        a = np.asarray(self.alpha, dtype=np.float64)
        a.setflags(write=False)
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class GiniStats:
    """Concentration of a marginal: expected probability and Gini variation."""

    ep_y: float
    v_g: float


def _as_joint(j: JointLike) -> JointDistribution:
    if isinstance(j, ContingencyTable):
        return to_joint(j)
    if isinstance(j, JointDistribution):
        return j
    raise DataError(f"expected a joint distribution or contingency table, got {type(j)!r}")


def _checked_marginals(j: JointDistribution) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Marginals plus the conditional-ready joint restricted to observed X rows."""
    p = j.p_xy
    p_x = j.p_x
    p_y = j.p_y
    if (p_y <= 0).any():
        raise NumericDomainError(
            "response has a zero-probability category; drop unused categories first"
        )
    mask = p_x > 0
    return p[mask], p_x[mask], p_y


def association_matrix(j: JointLike) -> AssociationMatrix:
    """Row-stochastic matrix of expected prediction rates per true category.

    Entry (s, t) sums, over explanatory cells with positive mass, the
    product of the cell's joint masses with categories s and t, scaled by
    the cell mass and the marginal of s.  Explanatory cells with zero
    probability contribute nothing.
    """
    j = _as_joint(j)
    p, p_x, p_y = _checked_marginals(j)
    cond = p / p_x[:, None]              # p(Y=t | X=i) on observed rows
    gamma = (cond.T @ p) / p_y[:, None]  # rows: true category s
    return AssociationMatrix(gamma, j.y_domain)


def association_vector(j: JointLike) -> AssociationVector:
    """Accuracy-lift rate for each response category.

    Component s is the diagonal entry of the association matrix for s,
    normalized from its independence baseline (the marginal of s) to 1.
    Undefined when Y is constant.
    """
    j = _as_joint(j)
    p, p_x, p_y = _checked_marginals(j)
    if (p_y >= 1).any() or j.n_y < 2:
        raise NumericDomainError("response is constant; association vector undefined")
    e_sq = (p * p / p_x[:, None]).sum(axis=0)     # E[p(Y=s|X)^2]
    gamma_ss = e_sq / p_y
    theta = (gamma_ss - p_y) / (1.0 - p_y)
    return AssociationVector(theta, j.y_domain)


def make_weights(scheme: str, p_y=None, custom=None) -> WeightVector:
    """Build a normalized weight vector over response categories.

    ``scheme`` is one of:

    * ``"gk"`` -- each category weighted by its share of the response's
      Gini variation, p(1-p) normalized; reproduces Goodman-Kruskal tau.
    * ``"ew"`` (alias ``"equal"``) -- uniform weights.
    * ``"ipw"`` -- inverse-probability weights, emphasizing rare
      categories.
    * ``"custom"`` -- normalize the provided nonnegative ``custom``
      vector.

    The named schemes require a strictly positive marginal ``p_y``.
    """
    if scheme == "custom":
        if custom is None:
            raise DataError("custom scheme needs a weight vector")
        a = np.asarray(custom, dtype=np.float64)
        if (a < 0).any():
            raise NumericDomainError("custom weights must be nonnegative")
        s = a.sum()
        if s <= 0:
            raise NumericDomainError("custom weights sum to zero")
        a = a / s
        return WeightVector(a, bool((a > 0).all()))

    key = _SCHEME_ALIASES.get(scheme)
    if key is None:
        raise DataError(f"unknown weight scheme {scheme!r}")
    if p_y is None:
        raise DataError(f"scheme {scheme!r} needs the response marginal")
    p = np.asarray(p_y, dtype=np.float64)
    if (p <= 0).any():
        raise NumericDomainError(
            "weight schemes require all response categories to have positive probability"
        )
    if key == "ew":
        a = np.full(p.shape, 1.0 / p.size)
    elif key == "gk":
        w = p * (1.0 - p)
        total = w.sum()
        if total <= 0:
            raise NumericDomainError("response is constant; gk weights undefined")
        a = w / total
    else:  # ipw
        w = 1.0 / p
        a = w / w.sum()
    return WeightVector(a, True)


def tau(theta: AssociationVector, alpha: WeightVector) -> float:
    """Weighted global association degree: alpha-weighted mean of the lifts."""
    if alpha.alpha.shape != theta.theta.shape:
        raise DataError("weight vector length does not match response categories")
    return float(alpha.alpha @ theta.theta)


def tau_scheme(j: JointLike, scheme: str = "gk", custom=None) -> float:
    """Association degree of Y on X under a named weight scheme."""
    j = _as_joint(j)
    th = association_vector(j)
    w = make_weights(scheme, p_y=j.p_y, custom=custom)
    return tau(th, w)


def gk_tau_direct(j: JointLike) -> float:
    """Goodman-Kruskal tau from its closed form, bypassing the vector route.

    Relative reduction of the response's Gini variation achieved by
    conditioning on X.  Kept as an independent oracle: it must agree with
    ``tau(association_vector(j), gk weights)`` to near machine precision.
    """
    j = _as_joint(j)
    p, p_x, p_y = _checked_marginals(j)
    ep_y = float(p_y @ p_y)
    if 1.0 - ep_y <= 0:
        raise NumericDomainError("response is constant; tau undefined")
    cond_ep = float((p * p / p_x[:, None]).sum())
    return (cond_ep - ep_y) / (1.0 - ep_y)


def gini(p_y) -> GiniStats:
    """Expected probability (sum of squares) and Gini variation of a marginal."""
    p = np.asarray(p_y, dtype=np.float64)
    ep = float(p @ p)
    return GiniStats(ep_y=ep, v_g=1.0 - ep)
