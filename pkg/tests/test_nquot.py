import pytest

from liedecomp.decomp import n_lie_decomposition, n_rank, witt_rank
from liedecomp.freelie.linalg import rank_of_vectors
from liedecomp.freelie.nquot import listed_n_basis, n_relations, quotient_basis_n
from liedecomp.freelie.weights import formal_character
from liedecomp.freelie.words import embed
from liedecomp.symfunc import character_decompose


def test_no_relations_below_degree_six():
    for k in range(1, 6):
        assert n_relations(3, k) == []
        q = quotient_basis_n(3, k)
        assert q.rank == witt_rank(3, k) and q.relations_rank == 0


def test_degree_three_is_full():
    q = quotient_basis_n(3, 3)
    assert q.rank == 8
    assert q.listed_is_basis


def test_degree_four_rank():
    assert quotient_basis_n(3, 4).rank == n_rank(3, 4) == 18


def test_listed_family_fails_in_degree_four():
    # 15 + 9 listed elements, but the quotient has rank 18
    q = quotient_basis_n(3, 4)
    assert not q.listed_is_basis
    assert len(listed_n_basis(3, 4)) == 24
    assert len(listed_n_basis(3, 4)) > rank_of_vectors(embed(b) for b in listed_n_basis(3, 4))


@pytest.mark.parametrize("n,k", [(2, 6), (2, 7), (3, 5), (3, 6), (3, 7), (4, 6)])
def test_listed_family_is_basis(n, k):
    q = quotient_basis_n(n, k)
    assert q.rank == n_rank(n, k)
    assert q.listed_is_basis


@pytest.mark.parametrize("n,k", [(3, 6), (4, 6), (3, 7)])
def test_quotient_character(n, k):
    q = quotient_basis_n(n, k)
    got = character_decompose(formal_character(q.basis, n), n)
    assert got == n_lie_decomposition(k, n)


def test_relations_are_lie_elements_of_right_degree():
    for rel in n_relations(3, 6):
        assert rel.degree() == 6
    assert quotient_basis_n(3, 6).relations_rank == witt_rank(3, 6) - n_rank(3, 6)


def test_bad_degree():
    with pytest.raises(ValueError):
        quotient_basis_n(3, 0)
