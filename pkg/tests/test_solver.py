import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyptree.canonical import u2, u3, u6, u7
from hyptree.corpus import table_from_matrix
from hyptree.errors import BudgetExceeded
from hyptree.solver import min_depth, oracle_min_depth, shannon_profile
from hyptree.trees import QueryModel, depth, verify_solves

MODELS = list(QueryModel)


def depths(system, problem):
    return [min_depth(system, problem, m).depth for m in MODELS]


# values frozen from the exhaustive oracle
def test_cube_every_model_two(cube2):
    assert depths(cube2, cube2.problem()) == [2, 2, 2, 2, 2]


def test_u6_three_points_plus_rest():
    s = u6(3)
    assert depths(s, s.problem()) == [3, 1, 1, 1, 1]


def test_u3_witness_problem():
    s = u3(2)
    assert depths(s, s.problem(["p1", "p2", "l2"])) == [2, 1, 1, 2, 2]


def test_single_tuple_is_depth_zero():
    s = table_from_matrix([[1, 0], [1, 0]])
    result = min_depth(s, s.problem(), QueryModel.M3, extract=True)
    assert result.depth == 0
    assert depth(result.tree) == 0


def test_u7_m1_is_binary_search():
    for n in (1, 3, 4, 7, 8):
        s = u7(n)
        assert min_depth(s, s.problem(), QueryModel.M1).depth == (n).bit_length()


tables = st.integers(1, 3).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=1, max_size=6
    )
)


@settings(max_examples=60, deadline=None)
@given(tables)
def test_matches_oracle_and_trees_verify(rows):
    s = table_from_matrix(rows)
    z = s.problem()
    for m in MODELS:
        result = min_depth(s, z, m, extract=True)
        assert result.depth == oracle_min_depth(s, z, m, z.dim)
        assert verify_solves(s, z, result.tree, m)
        assert depth(result.tree) == result.depth


@settings(max_examples=40, deadline=None)
@given(tables)
def test_reduced_hypotheses_give_same_trees(rows):
    s = table_from_matrix(rows)
    z = s.problem()
    for m in (QueryModel.M2, QueryModel.M3):
        fast = min_depth(s, z, m, extract=True)
        slow = min_depth(s, z, m, extract=True, reduce_hypotheses=False)
        assert fast.depth == slow.depth
        assert fast.tree == slow.tree


@settings(max_examples=60, deadline=None)
@given(tables)
def test_duplicating_an_element_changes_nothing(rows):
    s = table_from_matrix(rows)
    dup = s.with_duplicate(0)
    assert depths(s, s.problem()) == depths(dup, dup.problem())


def test_model_chain_on_random_tables(rng):
    for _ in range(60):
        n = int(rng.integers(1, 5))
        s = table_from_matrix(rng.integers(0, 2, size=(int(rng.integers(1, 9)), n)))
        h1, h2, h3, h4, h5 = depths(s, s.problem())
        assert h3 <= h5 <= h4 <= n
        assert h2 <= h4 and h3 <= h1 and h3 <= h2 and h5 <= h1


def test_extraction_is_deterministic():
    s = u3(3)
    a = min_depth(s, s.problem(), QueryModel.M5, extract=True).tree
    b = min_depth(s, s.problem(), QueryModel.M5, extract=True).tree
    assert a == b


def test_shannon_u7_profile():
    rows = shannon_profile(u7(7), QueryModel.M1, 7)
    assert [r.depth for r in rows] == [1, 2, 2, 3, 3, 3, 3]
    assert rows[-1].argmax == (0, 1, 2, 3)


def test_shannon_cache_agrees_with_direct_maximum():
    s = u3(3)
    for m in MODELS:
        rows = shannon_profile(s, m, 3)
        for row in rows:
            direct = max(
                min_depth(s, s.problem(c), m).depth
                for k in range(1, row.n + 1)
                for c in itertools.combinations(range(s.num_attributes), k)
            )
            assert row.depth == direct


def test_shannon_cube_is_identity():
    for m in MODELS:
        assert [r.depth for r in shannon_profile(u2(4), m, 4)] == [1, 2, 3, 4]


def test_shannon_threads_agree():
    s = u3(4)
    assert shannon_profile(s, QueryModel.M4, 4, threads=1) == shannon_profile(s, QueryModel.M4, 4, threads=4)


def test_shannon_budget():
    with pytest.raises(BudgetExceeded):
        shannon_profile(u3(7), QueryModel.M1, 7, budget=100)


def test_shannon_budget_from_environment(monkeypatch):
    monkeypatch.setenv("HYPTREE_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        shannon_profile(u7(4), QueryModel.M1, 2)
