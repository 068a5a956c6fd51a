"""Shared test helpers: random ensembles and the acceptance summary."""

import numpy as np
import pytest

from catassoc import Dataset, joint_from_counts

# ---------------------------------------------------------------------
# random-object generators (seeded by the caller for reproducibility)
# ---------------------------------------------------------------------


def random_joint(rng, nx, ny, zeros=False):
    """Random strictly positive (or optionally sparse) joint distribution."""
    p = rng.random((nx, ny)) + 0.05
    if zeros:
        mask = rng.random((nx, ny)) < 0.25
        if mask.all():
            mask[0, 0] = False
        p = np.where(mask, 0.0, p)
        # keep every marginal positive
        for s in range(ny):
            if p[:, s].sum() == 0:
                p[rng.integers(0, nx), s] = rng.random() + 0.05
        for i in range(nx):
            if p[i].sum() == 0:
                p[i, rng.integers(0, ny)] = rng.random() + 0.05
    return joint_from_counts(p)


def _nonconstant(col):
    return len(set(col)) > 1


def random_triple_dataset(rng, m_range=(8, 40)):
    """Random (X1, X2, Y) dataset with structured relations.

    The modes deliberately produce exact ties (copies, relabelings,
    mergers, functional responses) so that the equivalence levels fire
    nontrivially.
    """
    while True:
        m = int(rng.integers(*m_range))
        k1 = int(rng.integers(2, 5))
        x1 = rng.integers(0, k1, m)
        mode = int(rng.integers(0, 5))
        if mode == 0:  # bijective relabeling
            perm = rng.permutation(k1)
            x2 = perm[x1]
        elif mode == 1:  # coarsening
            k2 = max(2, k1 - 1)
            merge = rng.integers(0, k2, k1)
            x2 = merge[x1]
        elif mode == 2:  # independent
            x2 = rng.integers(0, int(rng.integers(2, 5)), m)
        elif mode == 3:  # exact copy
            x2 = x1.copy()
        else:  # refinement
            x2 = x1 * 2 + rng.integers(0, 2, m)
        ymode = int(rng.integers(0, 4))
        ky = int(rng.integers(2, 4))
        if ymode == 0:  # function of x1
            f = rng.integers(0, ky, k1 + 1)
            y = f[x1]
        elif ymode == 1:  # function of x2
            f = rng.integers(0, ky, int(x2.max()) + 1)
            y = f[x2]
        else:  # random
            y = rng.integers(0, ky, m)
        if _nonconstant(x1) and _nonconstant(x2) and _nonconstant(y):
            return Dataset.from_label_columns({
                "X1": [str(v) for v in x1],
                "X2": [str(v) for v in x2],
                "Y": [str(v) for v in y],
            })


def random_dataset(rng, n_vars=3, m_range=(10, 60), k_range=(2, 5)):
    """Random dataset with independent-ish columns of modest cardinality."""
    while True:
        m = int(rng.integers(*m_range))
        cols = {}
        for j in range(n_vars):
            k = int(rng.integers(*k_range))
            cols[f"V{j}"] = [str(v) for v in rng.integers(0, k, m)]
        if all(_nonconstant(c) for c in cols.values()):
            return Dataset.from_label_columns(cols)


def align_by_labels(values, domain, wanted):
    """Reorder a vector indexed by ``domain`` into ``wanted`` label order."""
    idx = [list(domain).index(lab) for lab in wanted]
    return np.asarray(values)[idx]


# ---------------------------------------------------------------------
# acceptance summary: one line per criterion at the end of the run
# ---------------------------------------------------------------------

ACCEPTANCE_RESULTS: dict[str, bool] = {}
ACCEPTANCE_NOTES: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.module.__name__ == "test_acceptance":
        ACCEPTANCE_RESULTS[item.name] = rep.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ACCEPTANCE_RESULTS[name] else "FAIL"
        line = f"[{status}] {name}"
        note = ACCEPTANCE_NOTES.get(name)
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)
