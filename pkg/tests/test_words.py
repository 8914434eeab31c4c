from itertools import product

import pytest
from hypothesis import given, strategies as st

from liedecomp.decomp import witt_rank
from liedecomp.freelie.linalg import rank_of_vectors
from liedecomp.freelie.words import (
    TensorVector,
    bracket_degree,
    bracket_str,
    commutator,
    embed,
    embed_left_normed,
    foliage,
    is_lyndon,
    iter_words,
    left_normed,
    letter,
    lyndon_basis,
    lyndon_bracket,
    lyndon_words,
    standard_factorization,
    word_weight,
)


def test_tensor_vector_arithmetic():
    a = TensorVector({(1, 2): 1, (2, 1): -1})
    b = TensorVector({(1, 2): -1})
    assert a + b == {(2, 1): -1}
    assert a - a == {}
    assert -a == {(1, 2): -1, (2, 1): 1}
    assert 3 * b == {(1, 2): -3}
    assert letter(1) @ letter(2) == {(1, 2): 1}
    assert a.degree() == 2
    assert TensorVector().degree() is None
    with pytest.raises(ValueError):
        TensorVector({(1,): 1, (1, 2): 1}).degree()


def test_lyndon_words_small():
    assert lyndon_words(2, 3) == [(1, 1, 2), (1, 2, 2)]
    assert lyndon_words(3, 1) == [(1,), (2,), (3,)]
    assert lyndon_words(2, 4) == [(1, 1, 1, 2), (1, 1, 2, 2), (1, 2, 2, 2)]
    assert lyndon_words(0, 3) == []


def _brute_lyndon(n, k):
    return sorted(w for w in product(range(1, n + 1), repeat=k) if is_lyndon(w))


@pytest.mark.parametrize("n", range(1, 5))
def test_lyndon_words_match_brute_force(n):
    for k in range(1, 7):
        assert lyndon_words(n, k) == _brute_lyndon(n, k)


@pytest.mark.parametrize("n", range(1, 6))
def test_lyndon_count_is_witt(n):
    for k in range(1, 8):
        assert len(lyndon_basis(n, k)) == witt_rank(n, k)


def test_standard_factorization():
    assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))
    assert standard_factorization((1, 2, 2)) == ((1, 2), (2,))
    assert standard_factorization((1, 1, 2, 1, 2)) == ((1, 1, 2), (1, 2))
    with pytest.raises(ValueError):
        standard_factorization((1,))


def test_lyndon_bracket_and_foliage():
    assert lyndon_bracket((1, 2, 2)) == ((1, 2), 2)
    for k in range(1, 6):
        for w in lyndon_words(3, k):
            b = lyndon_bracket(w)
            assert foliage(b) == w
            assert bracket_degree(b) == k


def test_basis_examples():
    assert lyndon_basis(3, 1) == [1, 2, 3]
    assert lyndon_basis(2, 3) == [(1, (1, 2)), ((1, 2), 2)]
    assert len(lyndon_basis(3, 4)) == 18


def test_embed_examples():
    assert embed(1) == {(1,): 1}
    assert embed((1, 2)) == {(1, 2): 1, (2, 1): -1}
    assert embed(((1, 2), 2)) == {(1, 2, 2): 1, (2, 1, 2): -2, (2, 2, 1): 1}
    assert embed_left_normed((1, 2, 2)) == embed(((1, 2), 2))
    assert bracket_str(((1, 2), 3)) == "[[x1,x2],x3]"


@pytest.mark.parametrize("n,k", [(2, 6), (3, 5), (3, 6), (4, 4), (4, 5)])
def test_embedding_is_injective_on_basis(n, k):
    vecs = [embed(b) for b in lyndon_basis(n, k)]
    assert rank_of_vectors(vecs) == witt_rank(n, k)


def test_left_normed():
    assert left_normed((1, 2, 3)) == ((1, 2), 3)
    assert left_normed((4,)) == 4


small_words = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(tuple)


@given(small_words, small_words)
def test_embedding_is_a_lie_map(u, v):
    a, b = embed_left_normed(u), embed_left_normed(v)
    assert embed((left_normed(u), left_normed(v))) == commutator(a, b)
    assert commutator(a, b) == -commutator(b, a)


@given(small_words, small_words, small_words)
def test_jacobi_in_tensor_algebra(u, v, w):
    a, b, c = embed_left_normed(u), embed_left_normed(v), embed_left_normed(w)
    total = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert total == {}


def test_word_weight():
    assert word_weight((1, 3, 3), 4) == (1, 0, 2, 0)
    assert len(list(iter_words(3, 2))) == 9
