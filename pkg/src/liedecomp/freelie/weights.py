"""Torus weights, raising operators and maximal-vector checks.

Mixed tensors live in ``(H*)^(x)a (x) H^(x)b`` and are keyed by
``(duals, word)``.  The raising operator ``E_ij`` acts by
``E_ij x_l = delta_jl x_i`` on ``H`` and ``E_ij x_l^* = -delta_li x_j^*`` on
``H*``, extended by the Leibniz rule over tensor factors.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from typing import Callable, Iterable, NamedTuple, Sequence

from .words import BracketWord, TensorVector, embed, foliage, left_normed, word_weight

MixedKey = tuple[tuple[int, ...], tuple[int, ...]]


def mixed(vec: TensorVector, duals: Sequence[int] = ()) -> TensorVector:
    """Tag every word of ``vec`` with the dual indices ``duals``."""
    return TensorVector({(tuple(duals), w): c for w, c in vec.items()})


def der_vector(terms: Iterable[tuple[int, BracketWord, int]]) -> TensorVector:
    """``sum c * x_i^* (x) b`` as a mixed tensor."""
    out = TensorVector()
    for i, b, c in terms:
        for w, s in embed(b).items():
            out.add_term(((i,), w), c * s)
    return out


def _as_mixed(vec: TensorVector) -> TensorVector:
    for key in vec:
        if isinstance(key[0], tuple):
            return vec
        return mixed(vec)
    return vec


def key_weight(key: MixedKey, n: int) -> tuple[int, ...]:
    duals, word = key
    w = list(word_weight(word, n))
    for i in duals:
        w[i - 1] -= 1
    return tuple(w)


def raise_op(vec: TensorVector, i: int, j: int) -> TensorVector:
    """Apply ``E_ij`` to a mixed tensor."""
    out = TensorVector()
    for (duals, word), c in _as_mixed(vec).items():
        for pos, l in enumerate(word):
            if l == j:
                out.add_term((duals, word[:pos] + (i,) + word[pos + 1:]), c)
        for pos, l in enumerate(duals):
            if l == i:
                out.add_term((duals[:pos] + (j,) + duals[pos + 1:], word), -c)
    return out


class MaximalVectorReport(NamedTuple):
    is_weight_vector: bool
    weight: tuple[int, ...] | None
    is_maximal: bool


def maximal_vector_check(vec: TensorVector, n: int) -> MaximalVectorReport:
    """Is ``vec`` a torus weight vector, and is it killed by every ``E_{i,i+1}``?"""
    vec = _as_mixed(vec)
    if not vec:
        raise ValueError("the zero vector has no weight")
    weights = {key_weight(key, n) for key in vec}
    weight = weights.pop() if len(weights) == 1 else None
    maximal = all(not raise_op(vec, i, i + 1) for i in range(1, n))
    return MaximalVectorReport(weight is not None, weight, maximal)


def v_sym(k: int, n: int) -> TensorVector:
    """``sum_{i >= 2} x_i^* (x) [x_i, x_1, ..., x_1]`` (``k`` copies of ``x_1``)."""
    return der_vector((i, left_normed((i,) + (1,) * k), 1) for i in range(2, n + 1))


def _sign(perm: Sequence[int]) -> int:
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def v_alt(k: int, n: int) -> TensorVector:
    """``sum_sigma sum_{l != sigma(1)} sgn(sigma) x_l^* (x) [x_l, x_sigma(1), ..., x_sigma(k)]``."""
    if k > n:
        raise ValueError("needs k <= n")
    terms = []
    for perm in permutations(range(1, k + 1)):
        s = _sign(perm)
        for l in range(1, n + 1):
            if l != perm[0]:
                terms.append((l, left_normed((l,) + perm), s))
    return der_vector(terms)


def formal_character(basis: Iterable, n: int,
                     weight: Callable[[object, int], tuple[int, ...]] | None = None) -> Counter:
    """Weight multiset of a basis of weight vectors.

    By default the items are bracket words and the weight is read off the
    foliage.
    """
    if weight is None:
        weight = lambda b, n: word_weight(foliage(b), n)  # noqa: E731
    return Counter(weight(b, n) for b in basis)


def der_weight(item: tuple[int, BracketWord], n: int) -> tuple[int, ...]:
    """Weight of ``x_i^* (x) b``: the foliage weight of ``b`` minus ``e_i``."""
    i, b = item
    w = list(word_weight(foliage(b), n))
    w[i - 1] -= 1
    return tuple(w)
