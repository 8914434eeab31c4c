from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from liedecomp.decomp import chen_rank
from liedecomp.freelie.chen import (
    apply_derivation,
    bracket_with_generator,
    chen_basis,
    chen_basis_independent,
    chen_bracket,
    chen_der_abelianization_rank,
    chen_der_basis,
    chen_lift,
    commutator_span,
    der_element,
    derivation_bracket_chen,
    metabelian_rank_by_embedding,
    quotient_basis_metabelian,
    second_derived_span,
    straighten,
)
from liedecomp.freelie.linalg import IncrementalSpan
from liedecomp.freelie.words import embed, left_normed


def test_straighten_examples():
    assert straighten((2, 1)) == {(2, 1): 1}
    assert straighten((1, 2)) == {(2, 1): -1}
    assert straighten((1, 1, 2)) == {}
    assert straighten((1, 2, 3)) == {(2, 1, 3): -1}
    # a > b > c needs one Jacobi step: [x3,x2,x1] = [x3,x1,x2] - [x2,x1,x3]
    assert straighten((3, 2, 1)) == {(3, 1, 2): 1, (2, 1, 3): -1}
    # tail symmetry
    assert straighten((3, 1, 3, 2)) == straighten((3, 1, 2, 3))


def test_chen_basis_counts():
    assert len(chen_basis(4, 3)) == 20
    assert chen_basis(3, 1) == [(1,), (2,), (3,)]
    for n in range(1, 6):
        for k in range(1, 7):
            assert quotient_basis_metabelian(n, k).rank == chen_rank(n, k)
    with pytest.raises(ValueError):
        quotient_basis_metabelian(3, 0)


def test_chen_basis_shape():
    for key in chen_basis(4, 5):
        a, b, *tail = key
        assert a > b and all(b <= t for t in tail) and list(tail) == sorted(tail)


@pytest.mark.parametrize("n,k", [(3, 4), (3, 5), (4, 4), (4, 5), (2, 6)])
def test_chen_rank_by_embedding(n, k):
    assert metabelian_rank_by_embedding(n, k) == chen_rank(n, k)
    assert chen_basis_independent(n, k)


index_lists = st.lists(st.integers(1, 3), min_size=2, max_size=5)


@given(index_lists)
def test_straightening_is_correct_modulo_second_derived(indices):
    n, k = 3, len(indices)
    span = IncrementalSpan()
    for v in second_derived_span(n, k):
        span.add(v)
    diff = embed(left_normed(indices))
    for key, c in straighten(indices).items():
        diff = diff - c * embed(chen_lift(key))
    assert span.contains(diff)


@given(index_lists, st.integers(1, 3))
def test_bracket_with_generator_is_consistent(indices, i):
    assert bracket_with_generator(straighten(indices), i) == straighten(list(indices) + [i])


def test_bracket_of_commutators_vanishes():
    u = straighten((2, 1))
    v = straighten((3, 1))
    assert chen_bracket(u, v) == {}
    x3 = {(3,): 1}
    assert chen_bracket(u, x3) == straighten((2, 1, 3))
    assert chen_bracket(x3, u) == -straighten((2, 1, 3))


def test_apply_derivation_examples():
    # f(x1) = [x2, x1], everything else fixed to zero
    f = {1: straighten((2, 1))}
    assert apply_derivation(f, {(1,): 1}) == straighten((2, 1))
    # f([x2,x1,x1]) = [x2, f(x1), x1]... only the x1 in slot two contributes
    out = apply_derivation(f, straighten((2, 1, 1)))
    expected = -bracket_with_generator(bracket_with_generator(f[1], 2), 1)
    assert out == expected


def _random_chen_der(rng, n, degree):
    basis = chen_basis(n, degree + 1)
    f = {}
    for _ in range(2):
        i = rng.randint(1, n)
        key = rng.choice(basis)
        f.setdefault(i, {})
        f[i][key] = f[i].get(key, 0) + rng.randint(-2, 2)
    return f


@given(st.randoms(use_true_random=False))
def test_chen_derivation_bracket_antisymmetric(rng):
    n = 4
    f, g = _random_chen_der(rng, n, 1), _random_chen_der(rng, n, 2)
    fg = derivation_bracket_chen(f, g, n)
    gf = derivation_bracket_chen(g, f, n)
    assert {i: -v for i, v in gf.items()} == fg


def test_chen_der_basis_size():
    assert len(chen_der_basis(4, 2)) == 4 * chen_rank(4, 3)


@pytest.mark.parametrize("k,expected", [(2, 10), (3, 20), (4, 35)])
def test_abelianization_rank(k, expected):
    assert chen_der_abelianization_rank(4, k) == expected == comb(k + 3, k)


def test_abelianization_preconditions():
    with pytest.raises(ValueError):
        chen_der_abelianization_rank(3, 2)
    with pytest.raises(ValueError):
        chen_der_abelianization_rank(4, 1)


# generator reductions in the abelianization, n = 4 ----------------------------

@pytest.fixture(scope="module", params=[2, 3])
def span_k(request):
    return request.param, commutator_span(4, request.param)


def test_generators_off_the_first_two_slots_vanish(span_k):
    # x_i^* (x) [x_a, x_b, ...] vanishes when i differs from a and b
    k, span = span_k
    n = 4
    for i in range(1, n + 1):
        for idx in product(range(1, n + 1), repeat=k + 1):
            if i in idx[:2]:
                continue
            assert span.contains(der_element([(i, idx, 1)]))


def test_adjacent_tail_swaps_are_commutators(span_k):
    k, span = span_k
    n = 4
    for i in range(1, n + 1):
        for rest in product(range(1, n + 1), repeat=k):
            if i in rest[:2]:
                continue
            for m in range(k - 1):
                swapped = list(rest)
                swapped[m], swapped[m + 1] = swapped[m + 1], swapped[m]
                diff = der_element([(i, (i,) + rest, 1), (i, (i,) + tuple(swapped), -1)])
                assert span.contains(diff)


def test_leading_index_can_be_moved(span_k):
    k, span = span_k
    n = 4
    for tail in product(range(1, n + 1), repeat=k):
        first, last = tail[0], tail[-1]
        for i in range(1, n + 1):
            if i == first:
                continue
            for j in range(1, n + 1):
                if j in (first, last):
                    continue
                diff = der_element([(i, (i,) + tail, 1), (j, (j,) + tail, -1)])
                assert span.contains(diff)


def test_symmetric_generators_survive(span_k):
    # s(i_1..i_k) for a sorted multi-index is not a commutator
    k, span = span_k
    n = 4
    idx = (1,) * k
    assert not span.contains(der_element([(2, (2,) + idx, 1)]))
