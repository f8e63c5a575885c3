import pytest
from hypothesis import given, settings, strategies as st

from oracles import (
    count_solutions_mod,
    det_fraction,
    det_leibniz,
    fib,
    invariant_factors_by_minors,
    spanning_trees_by_enumeration,
)
from ratknot.diagram import CheckerboardGraph, build_plat, checkerboard_graph, coloring_matrix
from ratknot.linalg import (
    BruteForceLimitExceeded,
    count_colorings_bruteforce,
    count_colorings_formula,
    count_colorings_snf,
    det_exact,
    first_minor,
    smith_normal_form,
    tree_count_matrix,
    tree_count_recursion,
)

TREFOIL_CM = [[2, -1, -1], [-1, -1, 2], [-1, 2, -1]]


def square(max_n=5, lo=-6, hi=6):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def rect(max_n=4, lo=-6, hi=6):
    return st.tuples(st.integers(1, max_n), st.integers(1, max_n)).flatmap(
        lambda rc: st.lists(
            st.lists(st.integers(lo, hi), min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]
        )
    )


def test_det_examples():
    assert det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_exact([[3]]) == 3
    assert det_exact([]) == 1
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0
    with pytest.raises(ValueError):
        det_exact([[1, 2, 3], [4, 5, 6]])


@given(square())
def test_det_matches_leibniz(m):
    assert det_exact(m) == det_leibniz(m)


@settings(max_examples=50)
@given(square(max_n=9, lo=-10**12, hi=10**12))
def test_det_matches_rational_elimination_on_big_entries(m):
    assert det_exact(m) == det_fraction(m)


def test_first_minor():
    assert abs(first_minor(TREFOIL_CM, 2, 2)) == 3
    assert first_minor([[7]], 0, 0) == 1
    cm = coloring_matrix(build_plat((2, 2)))
    assert {abs(first_minor(cm, j, k)) for j in range(4) for k in range(4)} == {5}
    with pytest.raises(IndexError):
        first_minor(TREFOIL_CM, 3, 0)
    with pytest.raises(ValueError):
        first_minor([[1, 2]], 0, 0)


def test_snf_examples():
    assert smith_normal_form(TREFOIL_CM).diagonal == (1, 3, 0)
    assert smith_normal_form([[1, 0], [0, 1]]).diagonal == (1, 1)
    assert smith_normal_form(coloring_matrix(build_plat((2, 2)))).diagonal == (1, 1, 5, 0)
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == (0, 0)


@given(rect())
def test_snf_matches_determinantal_divisors(m):
    got = smith_normal_form(m).diagonal
    assert list(got) == invariant_factors_by_minors(m)
    nonzero = [d for d in got if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


@given(rect(max_n=3, lo=-4, hi=4), st.integers(2, 6))
def test_snf_count_matches_enumeration(m, r):
    assert count_colorings_snf(m, r) == count_solutions_mod(m, r)


def test_tree_count_recursion():
    assert tree_count_recursion(()) == 1
    assert tree_count_recursion((3,)) == 3
    assert tree_count_recursion((1,) * 6) == 13
    assert [tree_count_recursion((1,) * n) for n in range(12)] == [fib(n + 1) for n in range(12)]
    with pytest.raises(ValueError):
        tree_count_recursion((2, -1))


def test_tree_count_matrix():
    assert tree_count_matrix(CheckerboardGraph(2, ((0, 1),) * 3)) == 3
    assert tree_count_matrix(checkerboard_graph((2, 2))) == 5
    assert tree_count_matrix(CheckerboardGraph(1, ())) == 1
    with pytest.raises(ValueError):
        tree_count_matrix(CheckerboardGraph(3, ((0, 1),)))


@pytest.mark.parametrize("tw", [(3,), (2, 2), (2, 2, 2), (1, 3, 2), (2, 1, 1, 2), (1, 1, 1, 1, 1)])
def test_matrix_tree_matches_enumeration(tw):
    g = checkerboard_graph(tw)
    assert tree_count_matrix(g) == spanning_trees_by_enumeration(g.vertex_count, g.edges)


def test_coloring_counts_examples():
    assert count_colorings_formula((3,), 3) == 9
    assert count_colorings_formula((3,), 5) == 5
    assert count_colorings_formula((2, 2), 5) == 25
    assert count_colorings_formula((1, -1), 4) == 16  # determinant 0
    tref = build_plat((3,))
    assert count_colorings_snf(coloring_matrix(tref), 3) == 9
    assert count_colorings_snf(coloring_matrix(tref), 2) == 2
    assert count_colorings_bruteforce(tref, 3) == 9
    assert count_colorings_bruteforce(tref, 5) == 5
    assert count_colorings_bruteforce(build_plat((2, 2)), 5, prune=False) == 25
    with pytest.raises(ValueError):
        count_colorings_formula((3,), 1)
    with pytest.raises(ValueError):
        count_colorings_snf(TREFOIL_CM, 1)


def test_bruteforce_bound():
    d = build_plat((2, 2))
    with pytest.raises(BruteForceLimitExceeded):
        count_colorings_bruteforce(d, 5, cap=5**4 - 1, prune=False)
    assert count_colorings_bruteforce(d, 5, cap=5**4, prune=False) == 25
    with pytest.raises(BruteForceLimitExceeded):
        count_colorings_bruteforce(d, 5, cap=10)


@pytest.mark.parametrize("tw", [(3,), (2, 2), (1, -2), (2, 1, 2), (1, -1), (3, 1), (-2, 3)])
@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_pruned_search_matches_plain_enumeration(tw, r):
    d = build_plat(tw)
    assert count_colorings_bruteforce(d, r) == count_colorings_bruteforce(d, r, prune=False)


@given(st.lists(st.integers(-3, 3).filter(bool), min_size=1, max_size=4), st.integers(2, 9))
def test_counts_are_multiples_of_r(tw, r):
    n = count_colorings_snf(coloring_matrix(build_plat(tw)), r)
    assert n >= r and n % r == 0
