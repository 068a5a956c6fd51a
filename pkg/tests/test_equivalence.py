"""Equivalence levels between explanatory variables and their hierarchy."""

import numpy as np
import pytest

from catassoc import (
    DataError,
    Dataset,
    e2prime,
    equivalence_levels,
)
from catassoc.fixtures import sevenths_dataset, sixths_dataset, tenths_dataset

from conftest import random_triple_dataset


def with_extra_copy(ds, src, new):
    cols = {nm: list(ds.labels(nm)) for nm in ds.names}
    cols[new] = list(ds.labels(src))
    return Dataset.from_label_columns(cols)


class TestCounterexampleFixtures:
    def test_sixths_level4_without_level3(self):
        rep = equivalence_levels(sixths_dataset(), "X1", "X2", "Y", exact=True)
        assert rep.levels[4] and not rep.levels[3]
        assert rep.strongest == 4

    def test_sixths_gamma_values(self):
        from catassoc import association_matrix, contingency, to_joint
        ds = sixths_dataset()
        j1 = to_joint(contingency(ds, "X1", "Y"))
        j2 = to_joint(contingency(ds, "X2", "Y"))
        g1 = association_matrix(j1)
        g2 = association_matrix(j2)
        # all diagonal entries are 1/2 for both variables
        assert np.abs(np.diag(g1.gamma) - 0.5).max() <= 1e-12
        assert np.abs(np.diag(g2.gamma) - 0.5).max() <= 1e-12
        # but the (1,2) off-diagonal separates the matrices
        i1, i2 = g1.y_domain.index("1"), g1.y_domain.index("2")
        assert abs(g1.gamma[i1, i2] - 0.5) <= 1e-12
        assert abs(g2.gamma[i1, i2] - 0.0) <= 1e-12

    def test_tenths_level5_without_level4(self):
        rep = equivalence_levels(tenths_dataset(), "X1", "X2", "Y", exact=True)
        assert rep.levels[5] and not rep.levels[4]
        assert rep.strongest == 5

    def test_sevenths_level2_without_level1(self):
        rep = equivalence_levels(sevenths_dataset(), "X1", "X2", "Y", exact=True)
        assert rep.levels[2] and not rep.levels[1]
        assert rep.strongest == 2

    def test_sevenths_e2prime_false(self):
        ds = sevenths_dataset()
        from catassoc import tau_joint
        assert tau_joint(ds, "Y", ["X1"]) >= 1 - 1e-12
        assert tau_joint(ds, "Y", ["X2"]) >= 1 - 1e-12
        assert not e2prime(ds, "X1", "X2")


class TestE2Prime:
    def test_bijective_relabeling(self):
        ds = tenths_dataset()
        cols = {nm: list(ds.labels(nm)) for nm in ds.names}
        relabel = {"1": "d", "2": "c", "3": "b", "4": "a"}
        cols["X1b"] = [relabel[v] for v in cols["X1"]]
        ds2 = Dataset.from_label_columns(cols)
        assert e2prime(ds2, "X1", "X1b")

    def test_independent_false(self):
        ds = Dataset.from_label_columns({
            "A": ["0", "0", "1", "1"],
            "B": ["0", "1", "0", "1"],
        })
        assert not e2prime(ds, "A", "B")

    def test_same_variable_rejected(self):
        with pytest.raises(DataError):
            e2prime(tenths_dataset(), "X1", "X1")


class TestReflexivityAndSymmetry:
    def test_copy_is_equivalent_at_all_weak_levels(self):
        ds = with_extra_copy(tenths_dataset(), "X1", "X1c")
        rep = equivalence_levels(ds, "X1", "X1c", "Y", exact=True)
        assert rep.levels[3] and rep.levels[4] and rep.levels[5]

    def test_symmetry(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            ds = random_triple_dataset(rng)
            a = equivalence_levels(ds, "X1", "X2", "Y", exact=True)
            b = equivalence_levels(ds, "X2", "X1", "Y", exact=True)
            # levels 2-5 are symmetric by definition; level 1 as stated
            # pins the response condition to the first variable, and the
            # remaining conditions force it for the other one too
            for i in (2, 3, 4, 5):
                assert a.levels[i] == b.levels[i]


class TestHierarchy:
    def test_chain_on_random_triples(self):
        rng = np.random.default_rng(9)
        fired = {i: 0 for i in (1, 2, 3, 4)}
        for _ in range(400):
            ds = random_triple_dataset(rng)
            rep = equivalence_levels(ds, "X1", "X2", "Y", exact=True)
            for i in (1, 2, 3, 4):
                if rep.levels[i]:
                    fired[i] += 1
                    assert rep.levels[i + 1], (
                        f"level {i} held without level {i + 1}: {rep.details}"
                    )
        # the ensemble is structured so every implication is exercised
        assert all(v > 0 for v in fired.values()), fired

    def test_e2prime_implies_level3(self):
        rng = np.random.default_rng(10)
        fired = 0
        for _ in range(300):
            ds = random_triple_dataset(rng)
            if e2prime(ds, "X1", "X2", tol=0.0):
                fired += 1
                rep = equivalence_levels(ds, "X1", "X2", "Y", exact=True)
                assert rep.levels[3]
        assert fired > 0

    def test_binary_response_levels_3_4_5_coincide(self):
        rng = np.random.default_rng(11)
        seen = 0
        for _ in range(300):
            ds = random_triple_dataset(rng)
            if ds.var("Y").size != 2:
                continue
            seen += 1
            rep = equivalence_levels(ds, "X1", "X2", "Y", exact=True)
            assert rep.levels[3] == rep.levels[4] == rep.levels[5], rep.details
        assert seen > 30


class TestValidation:
    def test_distinct_variables_required(self):
        ds = tenths_dataset()
        with pytest.raises(DataError):
            equivalence_levels(ds, "X1", "X1", "Y")

    def test_non_regular_alpha_rejected(self):
        from catassoc import make_weights
        ds = tenths_dataset()
        w = make_weights("custom", custom=[1.0, 0.0, 0.0])
        with pytest.raises(Exception):
            equivalence_levels(ds, "X1", "X2", "Y", alpha=w)
