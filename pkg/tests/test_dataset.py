"""Dataset ingestion, contingency tables, joints, composites."""

import io

import numpy as np
import pytest

from catassoc import (
    DataError,
    Dataset,
    NumericDomainError,
    composite,
    contingency,
    ingest_records,
    read_csv,
    to_joint,
)
from catassoc.fixtures import loan_dataset

from conftest import random_dataset


class TestIngest:
    def test_loan_csv_shape(self):
        ds = loan_dataset()
        assert ds.n_records == 650
        assert len(ds.variables) == 5

    def test_single_row(self):
        ds = ingest_records([["A", "B"], ["a", "b"]])
        assert ds.n_records == 1
        assert ds.var("A").domain == ("a",)
        assert ds.var("B").domain == ("b",)

    def test_drop_row_missing(self):
        rows = [["A", "B"], ["a", "b"], ["a", ""], ["c", "d"]]
        ds = ingest_records(rows, missing_policy="drop_row")
        assert ds.n_records == 2

    def test_as_category_missing(self):
        rows = [["A", "B"], ["a", "b"], ["a", ""]]
        ds = ingest_records(rows, missing_policy="as_category")
        assert ds.n_records == 2
        assert "NA" in ds.var("B").domain

    def test_first_occurrence_order(self):
        rows = [["A"], ["z"], ["a"], ["z"], ["m"]]
        ds = ingest_records(rows)
        assert ds.var("A").domain == ("z", "a", "m")

    def test_deterministic(self):
        rows = [["A", "B"], ["x", "u"], ["y", "v"], ["x", "v"]]
        d1 = ingest_records(rows)
        d2 = ingest_records(rows)
        assert d1.names == d2.names
        assert (d1.records == d2.records).all()
        assert all(v1.domain == v2.domain
                   for v1, v2 in zip(d1.variables, d2.variables))

    def test_errors(self):
        with pytest.raises(DataError):
            ingest_records([])
        with pytest.raises(DataError):
            ingest_records([["A", "A"], ["a", "b"]])
        with pytest.raises(DataError):
            ingest_records([["A", "B"], ["a"]])
        with pytest.raises(DataError):
            ingest_records([["A", "B"], ["", ""]], missing_policy="drop_row")

    def test_read_csv_roundtrip(self):
        text = "A,B\nx,u\ny,v\n"
        ds = read_csv(io.StringIO(text))
        assert ds.n_records == 2
        assert ds.var("A").domain == ("x", "y")


class TestContingency:
    def test_loan_ontime_risk_counts(self):
        ds = loan_dataset()
        ct = contingency(ds, "On-Time", "Risk")
        assert ct.counts.tolist() == [[11, 2, 52], [306, 24, 255]]
        assert ct.total == 650

    def test_single_record(self):
        ds = ingest_records([["A", "B"], ["a", "b"]])
        ct = contingency(ds, "A", "B")
        assert ct.counts.sum() == 1
        assert (ct.counts == 1).sum() == 1

    def test_total_equals_record_count(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            ds = random_dataset(rng)
            ct = contingency(ds, "V0", "V1")
            assert ct.total == ds.n_records

    def test_overlap_rejected(self):
        ds = loan_dataset()
        with pytest.raises(DataError):
            contingency(ds, ["Age", "Risk"], "Risk")


class TestToJoint:
    def test_loan_risk_marginal(self):
        ds = loan_dataset()
        j = to_joint(contingency(ds, "On-Time", "Risk"))
        assert np.allclose(j.p_y, [0.4877, 0.0400, 0.4723], atol=5e-5)

    def test_uniform_2x2(self):
        from catassoc import ContingencyTable
        ct = ContingencyTable("A", "B", ("a", "b"), ("u", "v"),
                              np.array([[1, 1], [1, 1]]))
        j = to_joint(ct)
        assert np.allclose(j.p_xy, 0.25)

    def test_sums_and_marginals(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            ds = random_dataset(rng)
            j = to_joint(contingency(ds, "V0", "V1"))
            assert abs(j.p_xy.sum() - 1.0) <= 1e-12
            assert np.allclose(j.p_x, j.p_xy.sum(axis=1), atol=1e-12)
            assert np.allclose(j.p_y, j.p_xy.sum(axis=0), atol=1e-12)

    def test_empty_rejected(self):
        from catassoc import ContingencyTable
        ct = ContingencyTable("A", "B", ("a",), ("u",), np.array([[0]]))
        with pytest.raises(NumericDomainError):
            to_joint(ct)


class TestComposite:
    def test_self_composite_size(self):
        ds = loan_dataset()
        assert composite(ds, ["Age"]).size == ds.var("Age").size

    def test_two_coins_all_pairs(self):
        ds = Dataset.from_label_columns({
            "A": ["0", "0", "1", "1"],
            "B": ["0", "1", "0", "1"],
        })
        assert composite(ds, ["A", "B"]).size == 4

    def test_loan_age_income_observed_pairs(self):
        # frozen by enumerating distinct (Age, Income) pairs in the fixture
        ds = loan_dataset()
        comp = composite(ds, ["Age", "Income"])
        expected = len({tuple(rec) for rec in
                        zip(ds.labels("Age"), ds.labels("Income"))})
        assert comp.size == expected == 7
        assert comp.size <= 9

    def test_monotone_domain_growth(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            ds = random_dataset(rng, n_vars=3)
            a = composite(ds, ["V0"]).size
            b = composite(ds, ["V1"]).size
            ab = composite(ds, ["V0", "V1"]).size
            assert ab >= max(a, b)
            assert ab <= a * b

    def test_cap(self):
        ds = loan_dataset()
        with pytest.raises(DataError):
            composite(ds, ["Age", "Income", "Credit"], max_cells=8)

    def test_unknown_variable(self):
        ds = loan_dataset()
        with pytest.raises(DataError):
            composite(ds, ["Age", "Nope"])
