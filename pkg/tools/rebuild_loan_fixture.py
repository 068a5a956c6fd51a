"""Rebuild the bundled loan.csv from its documented pairwise frequency tables.

The loan dataset ships as a frozen 650-record CSV under
``src/catassoc/data/``.  Only its pairwise frequency tables against Risk
and Credit are documented; this script searches for a record-level table
consistent with all of them and freezes the result.  The procedure:

1. For each of On-Time, Age, Income, solve a small integer 3-way
   transportation problem so that the (X, Risk), (X, Credit) and
   (Risk, Credit) margins all match exactly.  Backtracking search,
   value-ordered by closeness to the continuous IPF solution.
2. Within every (Risk, Credit) cell, zip the per-variable category
   multisets into records (ascending order; the coupling between
   variables inside a cell is not pinned down by the margins).
3. Reorder records so that each column's first occurrences follow the
   canonical domain order, making CSV ingestion reproduce the canonical
   category indexing.

Deterministic; run only when the fixture needs regenerating:

    python tools/rebuild_loan_fixture.py
"""

import collections
import sys

import numpy as np

# Pairwise counts: rows = X categories (canonical order), cols = Y categories.
RISK_TABLES = {
    "On-Time": np.array([[11, 2, 52], [306, 24, 255]]),
    "Age": np.array([[13, 9, 246], [291, 17, 61], [13, 0, 0]]),
    "Income": np.array([[19, 8, 45], [211, 17, 209], [87, 1, 53]]),
    "Credit": np.array([[35, 2, 40], [98, 9, 93], [184, 15, 174]]),
}
CREDIT_TABLES = {
    "On-Time": np.array([[19, 30, 16], [58, 170, 357]]),
    "Age": np.array([[40, 80, 148], [34, 118, 217], [3, 2, 8]]),
    "Income": np.array([[7, 20, 45], [54, 137, 246], [16, 43, 82]]),
    "Risk": np.array([[35, 98, 184], [2, 9, 15], [40, 93, 174]]),
}
HUB = CREDIT_TABLES["Risk"]  # Risk x Credit

ONTIME_LABELS = ["No", "Yes"]
AGE_LABELS = ["young", "med", "sen"]
INCOME_LABELS = ["low", "mid", "hi"]
RISK_LABELS = ["low", "med", "hi"]
CREDIT_LABELS = ["red", "yellow", "green"]


def ipf3(a, b, hub, iters=3000):
    """Continuous 3-way table with 2-way margins a=(x,r), b=(x,c), hub=(r,c)."""
    t = np.ones((a.shape[0], 3, 3))
    for _ in range(iters):
        m = t.sum(axis=2)
        t *= np.where(m > 0, a / np.where(m == 0, 1, m), 0)[:, :, None]
        m = t.sum(axis=1)
        t *= np.where(m > 0, b / np.where(m == 0, 1, m), 0)[:, None, :]
        m = t.sum(axis=0)
        t *= np.where(m > 0, hub / np.where(m == 0, 1, m), 0)[None, :, :]
    return t


def solve_integer_table(a, b, hub, force_pos=((0, 0, 0),)):
    """Backtracking search for an integer 3-way table with the given margins.

    ``force_pos`` cells are required to be >= 1 so that the final record
    stream starts with a row introducing every column's first category.
    """
    nx = a.shape[0]
    continuous = ipf3(a, b, hub)
    cells = [(x, r, c) for x in range(nx) for r in range(3) for c in range(3)]
    rem_a = a.astype(int).copy()
    rem_b = b.astype(int).copy()
    rem_hub = hub.astype(int).copy()
    table = np.zeros((nx, 3, 3), int)
    sys.setrecursionlimit(10000)

    def bt(k):
        if k == len(cells):
            return rem_a.sum() == 0 and rem_b.sum() == 0 and rem_hub.sum() == 0
        x, r, c = cells[k]
        last_a = not any(x2 == x and r2 == r for (x2, r2, c2) in cells[k + 1:])
        last_b = not any(x2 == x and c2 == c for (x2, r2, c2) in cells[k + 1:])
        last_h = not any(r2 == r and c2 == c for (x2, r2, c2) in cells[k + 1:])
        hi = min(rem_a[x, r], rem_b[x, c], rem_hub[r, c])
        forced = set()
        lows = [0]
        if last_a:
            forced.add(rem_a[x, r])
            lows.append(rem_a[x, r])
        if last_b:
            forced.add(rem_b[x, c])
            lows.append(rem_b[x, c])
        if last_h:
            forced.add(rem_hub[r, c])
            lows.append(rem_hub[r, c])
        if len(forced) > 1:
            return False
        lo = max(lows)
        if (x, r, c) in force_pos:
            lo = max(lo, 1)
        if lo > hi:
            return False
        if forced:
            v0 = forced.pop()
            vals = [v0] if v0 >= lo else []
        else:
            target = continuous[x, r, c]
            vals = sorted(range(lo, hi + 1), key=lambda v: (abs(v - target), v))
        for v in vals:
            table[x, r, c] = v
            rem_a[x, r] -= v
            rem_b[x, c] -= v
            rem_hub[r, c] -= v
            if bt(k + 1):
                return True
            rem_a[x, r] += v
            rem_b[x, c] += v
            rem_hub[r, c] += v
            table[x, r, c] = 0
        return False

    if not bt(0):
        raise RuntimeError("no integer table consistent with the margins")
    return table


def canonical_order(records, canon):
    """Reorder records so first occurrences follow the canonical domains."""
    codes = [tuple(canon[j].index(rec[j]) for j in range(5)) for rec in records]
    remaining = list(range(len(records)))
    need = [0] * 5
    introduced = [set() for _ in range(5)]
    order = []
    while remaining:
        pick = None
        for idx in remaining:
            if all(codes[idx][j] in introduced[j] or codes[idx][j] == need[j]
                   for j in range(5)):
                pick = idx
                break
        if pick is None:
            raise RuntimeError("cannot order records canonically")
        order.append(pick)
        remaining.remove(pick)
        for j in range(5):
            cj = codes[pick][j]
            if cj not in introduced[j]:
                introduced[j].add(cj)
                while need[j] in introduced[j]:
                    need[j] += 1
    return [records[i] for i in order]


def main():
    sols = {}
    for name in ("On-Time", "Age", "Income"):
        t = solve_integer_table(RISK_TABLES[name], CREDIT_TABLES[name], HUB)
        assert (t.sum(2) == RISK_TABLES[name]).all()
        assert (t.sum(1) == CREDIT_TABLES[name]).all()
        assert (t.sum(0) == HUB).all()
        sols[name] = t

    records = []
    for r in range(3):
        for c in range(3):
            per_var = []
            for name in ("On-Time", "Age", "Income"):
                vals = []
                for x in range(sols[name].shape[0]):
                    vals += [x] * sols[name][x, r, c]
                per_var.append(vals)
            for i in range(HUB[r, c]):
                records.append((
                    ONTIME_LABELS[per_var[0][i]],
                    AGE_LABELS[per_var[1][i]],
                    INCOME_LABELS[per_var[2][i]],
                    CREDIT_LABELS[c],
                    RISK_LABELS[r],
                ))
    assert len(records) == 650

    canon = [ONTIME_LABELS, AGE_LABELS, INCOME_LABELS, CREDIT_LABELS, RISK_LABELS]
    records = canonical_order(records, canon)

    def pair_table(ix, iy, xl, yl):
        cnt = collections.Counter((rec[ix], rec[iy]) for rec in records)
        return np.array([[cnt[(a, b)] for b in yl] for a in xl])

    assert (pair_table(0, 4, ONTIME_LABELS, RISK_LABELS) == RISK_TABLES["On-Time"]).all()
    assert (pair_table(1, 4, AGE_LABELS, RISK_LABELS) == RISK_TABLES["Age"]).all()
    assert (pair_table(2, 4, INCOME_LABELS, RISK_LABELS) == RISK_TABLES["Income"]).all()
    assert (pair_table(3, 4, CREDIT_LABELS, RISK_LABELS) == RISK_TABLES["Credit"]).all()
    assert (pair_table(0, 3, ONTIME_LABELS, CREDIT_LABELS) == CREDIT_TABLES["On-Time"]).all()
    assert (pair_table(1, 3, AGE_LABELS, CREDIT_LABELS) == CREDIT_TABLES["Age"]).all()
    assert (pair_table(2, 3, INCOME_LABELS, CREDIT_LABELS) == CREDIT_TABLES["Income"]).all()
    assert (pair_table(4, 3, RISK_LABELS, CREDIT_LABELS) == CREDIT_TABLES["Risk"]).all()

    out = "src/catassoc/data/loan.csv"
    with open(out, "w", encoding="utf-8") as f:
        f.write("On-Time,Age,Income,Credit,Risk\n")
        for rec in records:
            f.write(",".join(rec) + "\n")
    print(f"wrote {out} ({len(records)} records)")


if __name__ == "__main__":
    main()
