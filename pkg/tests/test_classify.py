import json

import pytest

from hyptree.canonical import CanonicalKind, canonical_system, u1, u2, u4, u5, u6, u7
from hyptree.classify import (
    INDICATOR_ROWS,
    classify,
    indicator_row,
    lemma_witnesses,
    reduced_subset_i_check,
    sauer_bound_check,
)
from hyptree.corpus import random_corpus
from hyptree.errors import BudgetExceeded, CertificateViolation, StructureError


def test_canonical_columns():
    assert u7(3).column(u7(3).index_of("l2")) == (0, 0, 1, 1)
    assert u6(3).column(u6(3).index_of("p2")) == (0, 1, 0, 0)
    s = u5(2)
    assert s.elements == ("1-1", "2-1", "2-2")
    assert s.column(s.index_of("f2")) == (0, 1, 1)


def test_canonical_budgets():
    with pytest.raises(BudgetExceeded):
        u1(5)
    with pytest.raises(BudgetExceeded):
        u2(11)
    with pytest.raises(StructureError):
        canonical_system("u8", 2)
    with pytest.raises(StructureError):
        canonical_system("u3", 0)


def test_u1_has_every_column():
    s = u1(3)
    assert s.num_attributes == 8
    assert len({s.column(a) for a in range(8)}) == 8


def test_u4_grid_size():
    s = u4(2)
    assert s.size == 9
    assert s.num_attributes == 2 + 4


@pytest.mark.parametrize("kind", list(CanonicalKind))
def test_canonical_rows(kind):
    w = lemma_witnesses(kind)
    failed = [c.name for c in w.checks if not c.passed]
    assert w.passed, failed


def test_indicator_rows():
    assert indicator_row((1, 1, 0, 1)) == 7
    assert indicator_row((1, 0, 0, 0)) is None
    assert len(set(INDICATOR_ROWS)) == 7


def test_report_json_is_stable():
    report = classify(canonical_system("u7", 7), "u7")
    data = json.loads(report.to_json())
    assert list(data) == [
        "system", "cap", "k_cap", "independence_dimension", "reduced", "i_reduced",
        "k_level", "indicator", "indicator_witness", "row", "disclaimer",
    ]
    assert data["indicator"] == {"R": 1, "D": 1, "C": 0, "I": 1}
    assert report.to_json() == classify(canonical_system("u7", 7), "u7").to_json()
    assert "row 7" in report.summary()


def test_report_k_level_cap():
    report = classify(canonical_system("u7", 7), "u7", k_cap=2)
    assert report.k_level is None
    assert json.loads(report.to_json())["k_level"] == "exceeds 2"
    assert report.indicator["C"] == 0


def test_sauer_examples(cube2):
    s = u7(7)
    assert sauer_bound_check(s, s.problem())
    assert sauer_bound_check(cube2, cube2.problem())


def test_sauer_strict_raises_on_forced_violation(cube2):
    with pytest.raises(CertificateViolation):
        sauer_bound_check(cube2, cube2.problem(), independence=0, strict=True)


def test_reduced_implies_i_reduced_on_random_tables():
    for s in random_corpus(3, 40, (1, 4), (1, 7)):
        assert reduced_subset_i_check(s, 3)
