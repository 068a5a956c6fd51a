"""Stratified bootstrap and the retention-ratio statistic."""

import numpy as np
import pytest

from catassoc import (
    DataError,
    NumericDomainError,
    gen_flu,
    retention_ratio,
    stratified_bootstrap,
)

from conftest import random_dataset


class TestStratifiedBootstrap:
    def test_constant_statistic(self):
        ds = random_dataset(np.random.default_rng(0))
        res = stratified_bootstrap(ds, "V0", lambda d: 7.5, B=50, seed=1)
        assert res.ci_low == res.ci_high == res.mean == 7.5

    def test_single_replicate(self):
        ds = random_dataset(np.random.default_rng(1))
        res = stratified_bootstrap(ds, "V0", lambda d: d.n_records * 0.0 +
                                   float(np.mean(d.codes("V1"))), B=1, seed=2)
        assert res.ci_low == res.ci_high == res.replicates[0]

    def test_stratum_sizes_preserved(self):
        ds = random_dataset(np.random.default_rng(2), n_vars=2, m_range=(40, 60))
        base = np.bincount(ds.codes("V0"), minlength=ds.var("V0").size)

        def stat(d):
            counts = np.bincount(d.codes("V0"), minlength=d.var("V0").size)
            assert (counts == base).all()
            return 0.0

        stratified_bootstrap(ds, "V0", stat, B=25, seed=3)

    def test_deterministic_given_seed(self):
        ds = random_dataset(np.random.default_rng(3))
        stat = lambda d: float(np.mean(d.codes("V1") == 0))
        a = stratified_bootstrap(ds, "V0", stat, B=40, seed=9)
        b = stratified_bootstrap(ds, "V0", stat, B=40, seed=9)
        assert (a.replicates == b.replicates).all()
        c = stratified_bootstrap(ds, "V0", stat, B=40, seed=10)
        assert not (a.replicates == c.replicates).all()

    def test_ci_widens_with_level(self):
        ds = random_dataset(np.random.default_rng(4), m_range=(30, 50))
        stat = lambda d: float(np.mean(d.codes("V1")))
        lo = stratified_bootstrap(ds, "V0", stat, B=200, level=0.5, seed=5)
        hi = stratified_bootstrap(ds, "V0", stat, B=200, level=0.99, seed=5)
        assert hi.ci_high - hi.ci_low >= lo.ci_high - lo.ci_low
        assert lo.ci_low <= lo.mean <= lo.ci_high

    def test_errors(self):
        ds = random_dataset(np.random.default_rng(5))
        with pytest.raises(DataError):
            stratified_bootstrap(ds, "V0", lambda d: 0.0, B=0, seed=0)
        with pytest.raises(DataError):
            stratified_bootstrap(ds, "V0", lambda d: 0.0, B=10, level=1.0, seed=0)


class TestRetentionRatio:
    def test_subset_equals_fullset(self):
        ds = gen_flu(4000, seed=0)
        full = ["X1", "X2", "R3", "R4", "S5"]
        assert abs(retention_ratio(ds, "Y", full, full) - 1.0) <= 1e-12

    def test_bounded_by_one(self):
        ds = gen_flu(4000, seed=1)
        full = ["X1", "X2", "R3", "R4", "S5"]
        r = retention_ratio(ds, "Y", ["X1", "X2"], full)
        assert r <= 1.0 + 1e-12

    def test_single_variable_ratio_near_table(self):
        # frozen from the population values: 0.2320 / 0.4986
        ds = gen_flu(100_000, seed=2)
        full = ["X1", "X2", "R3", "R4", "S5"]
        r = retention_ratio(ds, "Y", ["X1"], full)
        assert abs(r - 0.4653) <= 0.02

    def test_subset_must_be_contained(self):
        ds = gen_flu(500, seed=3)
        with pytest.raises(DataError):
            retention_ratio(ds, "Y", ["X1", "R3"], ["X1", "X2"])

    def test_zero_fullset_rejected(self):
        from catassoc import Dataset
        rng = np.random.default_rng(6)
        ds = Dataset.from_label_columns({
            "A": [str(v) for v in [0, 1] * 20],
            "Y": [str(v) for v in ([0] * 20 + [1] * 20)],
        })
        # A is exactly balanced within each Y level: zero association
        with pytest.raises(NumericDomainError):
            retention_ratio(ds, "Y", ["A"], ["A"])
