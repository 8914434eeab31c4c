from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from liedecomp.partitions import (
    Partition,
    StandardTableau,
    add_vertical_strip,
    conjugate,
    count_standard_tableaux,
    enumerate_partitions,
    hook_lengths,
    is_dominant,
    major_index,
    remove_vertical_strip,
    semistandard_tableaux,
    standard_tableaux,
    weyl_dimension,
)


def test_partition_normalises_trailing_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition() == ()
    assert Partition().weight() == 0 and Partition().length() == 0


@pytest.mark.parametrize("bad", [(1, 2), (2, -1)])
def test_partition_rejects_bad_parts(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_parse_and_print():
    assert Partition.parse("4,2,1") == (4, 2, 1)
    assert Partition.parse("0") == ()
    assert Partition.parse("(2^2,1^3)") == (2, 2, 1, 1, 1)
    assert str(Partition((4, 2, 1))) == "4,2,1"
    assert str(Partition()) == "0"
    assert Partition((2, 2, 1, 1, 1)).pretty() == "(2^2,1^3)"
    assert Partition().pretty() == "(0)"
    with pytest.raises(ValueError):
        Partition.parse("a,b")


@given(partitions(max_size=10))
def test_text_round_trip(lam):
    assert Partition.parse(str(lam)) == lam
    assert Partition.parse(lam.pretty()) == lam


def test_enumeration_is_reverse_lex():
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_partitions(4, max_length=2) == [(4,), (3, 1), (2, 2)]
    assert enumerate_partitions(0) == [()]


def test_partition_counts():
    # p(m) for m = 0..12
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    assert [len(enumerate_partitions(m)) for m in range(13)] == expected


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert Partition((4, 2, 1)).conjugate() == (3, 2, 1, 1)


@pytest.mark.parametrize("m", range(13))
def test_conjugate_is_involution(m):
    for lam in enumerate_partitions(m):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam).weight() == m


def test_add_vertical_strip_examples():
    assert add_vertical_strip((1,), 1, 3) == [(2,), (1, 1)]
    assert add_vertical_strip((2, 2), 0, 4) == [(2, 2)]
    assert add_vertical_strip((1,), 2, 2) == [(2, 1)]


def test_remove_vertical_strip_examples():
    assert remove_vertical_strip((2, 1), 1) == [(2,), (1, 1)]
    assert remove_vertical_strip((2, 2), 3) == []
    assert remove_vertical_strip((3, 1, 1), 0) == [(3, 1, 1)]


@given(partitions(max_size=7), st.integers(min_value=0, max_value=4))
def test_vertical_strips_inverse(mu, k):
    for lam in add_vertical_strip(mu, k):
        assert mu in remove_vertical_strip(lam, k)
    # every mu arising by removal comes back by adding
    for inner in remove_vertical_strip(mu, k):
        assert mu in add_vertical_strip(inner, k)


@given(partitions(max_size=6), st.integers(min_value=0, max_value=3))
def test_vertical_strip_is_conjugate_of_horizontal(mu, k):
    # a vertical strip is a set of k cells with at most one per row
    for lam in add_vertical_strip(mu, k):
        diff = [a - b for a, b in zip(lam, tuple(mu) + (0,) * len(lam))]
        assert all(d in (0, 1) for d in diff) and sum(diff) == k


def test_hook_lengths():
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    assert sorted(hook_lengths((2, 2))) == [1, 2, 2, 3]


def test_standard_tableaux_examples():
    assert len(list(standard_tableaux((5,)))) == 1
    assert len(list(standard_tableaux((2, 1)))) == 2
    assert len(list(standard_tableaux((2, 2)))) == 2


@pytest.mark.parametrize("m", range(1, 10))
def test_standard_tableaux_match_hook_formula(m):
    for lam in enumerate_partitions(m):
        tabs = list(standard_tableaux(lam))
        assert len(tabs) == count_standard_tableaux(lam)
        assert len(set(tabs)) == len(tabs)


def test_sum_of_squares_is_factorial():
    for m in range(1, 9):
        assert sum(count_standard_tableaux(l) ** 2 for l in enumerate_partitions(m)) == factorial(m)


def test_tableau_validation():
    StandardTableau(Partition((2, 1)), ((1, 2), (3,)))
    with pytest.raises(ValueError):
        StandardTableau(Partition((2, 1)), ((1, 3), (2, 4)))
    with pytest.raises(ValueError):
        StandardTableau(Partition((2, 1)), ((2, 1), (3,)))
    with pytest.raises(ValueError):
        StandardTableau(Partition((2, 1)), ((1, 2), (4,)))


def test_major_index_examples():
    m = 6
    (row,) = standard_tableaux((m,))
    assert major_index(row) == 0
    (col,) = standard_tableaux((1,) * m)
    assert major_index(col) == m * (m - 1) // 2
    # shape (m-1,1) with p in the second row
    for t in standard_tableaux((m - 1, 1)):
        p = t.rows[1][0]
        assert t.descent_set() == {p - 1}
        assert major_index(t) == p - 1


def test_major_index_distribution_hook_shape():
    # maj over SYT((2,1,1)) is {3,4,5}
    assert sorted(major_index(t) for t in standard_tableaux((2, 1, 1))) == [3, 4, 5]
    assert sorted(major_index(t) for t in standard_tableaux((2, 2))) == [2, 4]


def test_weyl_dimension_examples():
    assert weyl_dimension((0, 0, 0), 3) == 1
    assert weyl_dimension((2, 1, 0), 3) == 8
    assert weyl_dimension((3, 2, 1, 0), 4) == 64
    # rational weights: End(V) minus scalars, and the dual
    assert weyl_dimension((1, 0, 0, -1), 4) == 15
    assert weyl_dimension((0, 0, -1), 3) == 3


def test_weyl_dimension_errors():
    with pytest.raises(ValueError):
        weyl_dimension((1, 2), 2)
    with pytest.raises(ValueError):
        weyl_dimension((1, 1, 1), 2)
    assert not is_dominant((0, 1))


@pytest.mark.parametrize("n", range(1, 5))
def test_weyl_dimension_counts_semistandard_tableaux(n):
    for m in range(0, 6):
        for lam in enumerate_partitions(m, max_length=n):
            assert weyl_dimension(lam, n) == sum(1 for _ in semistandard_tableaux(lam, n))


def test_semistandard_tableaux_are_valid():
    tabs = list(semistandard_tableaux((2, 1), 3))
    assert len(tabs) == 8
    for t in tabs:
        assert t[0][0] <= t[0][1] and t[0][0] < t[1][0]


@given(partitions(max_size=6, max_length=3), st.integers(min_value=-3, max_value=3))
def test_weyl_dimension_det_twist_invariant(lam, e):
    w = lam.padded(3)
    assert weyl_dimension(tuple(x + e for x in w), 3) == weyl_dimension(w, 3)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4).map(lambda l: tuple(sorted(l, reverse=True))))
def test_weyl_dimension_of_dual(w):
    dual = tuple(-x for x in reversed(w))
    assert weyl_dimension(dual) == weyl_dimension(w)


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_weyl_dimension_count(n):
    for m in range(0, 7):
        total = sum(count_standard_tableaux(l) * weyl_dimension(l, n)
                    for l in enumerate_partitions(m, max_length=n))
        assert total == n ** m


def test_tableau_iteration_is_lazy():
    it = standard_tableaux((6, 5, 4, 3, 2, 1))
    first = next(it)
    assert first.rows[0] == (1, 2, 3, 4, 5, 6)


def test_content_counter_of_semistandard_tableaux():
    # Kostka K_{(2,1),(1,1,1)} = 2
    tabs = semistandard_tableaux((2, 1), 3)
    contents = Counter(tuple(sorted(x for r in t for x in r)) for t in tabs)
    assert contents[(1, 2, 3)] == 2
