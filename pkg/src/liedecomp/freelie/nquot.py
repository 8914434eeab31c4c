"""The N-quotient: the free Lie algebra modulo ``[L^(3), L^(3)] + [[L^(2), L^(2)], L^(2)]``.

Here ``L^(j)`` is the part of degree at least ``j``.  Both pieces are already
Lie ideals, so the degree-``k`` relations are spanned by ``[u, v]`` with
``u, v`` Lyndon elements of degrees at least 3, and ``[[a, b], c]`` with
``a, b, c`` of degrees at least 2.  All ranks are exact ranks inside the
tensor algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chen import chen_basis
from .linalg import IncrementalSpan
from .words import BracketWord, TensorVector, embed, left_normed, lyndon_basis


def n_relations(n: int, k: int) -> list[TensorVector]:
    out = []
    for i in range(3, k // 2 + 1):
        j = k - i
        left = lyndon_basis(n, i)
        right = lyndon_basis(n, j) if j != i else left
        for a_idx, u in enumerate(left):
            for b_idx, v in enumerate(right):
                if i == j and b_idx <= a_idx:
                    continue
                out.append(embed((u, v)))
    for p in range(2, k):
        for q in range(p, k):
            r = k - p - q
            if r < 2:
                continue
            first = lyndon_basis(n, p)
            second = lyndon_basis(n, q) if q != p else first
            third = lyndon_basis(n, r)
            for a_idx, a in enumerate(first):
                for b_idx, b in enumerate(second):
                    if p == q and b_idx <= a_idx:
                        continue
                    for c in third:
                        out.append(embed(((a, b), c)))
    return out


def listed_n_basis(n: int, k: int) -> list[BracketWord]:
    """Candidate weight-vector basis: Chen-type commutators plus ``[x_{i1},...,x_{i_{k-2}},[x_a,x_b]]``.

    The second family needs a head of length at least two, so it is empty
    for ``k <= 3``.
    """
    out: list[BracketWord] = [left_normed(key) for key in chen_basis(n, k)]
    if k >= 4:
        for head in chen_basis(n, k - 2):
            for b in range(1, n + 1):
                for a in range(b + 1, n + 1):
                    out.append((left_normed(head), (a, b)))
    return out


@dataclass(frozen=True)
class NQuotient:
    n: int
    k: int
    rank: int
    relations_rank: int
    basis: list
    listed_is_basis: bool


def quotient_basis_n(n: int, k: int) -> NQuotient:
    """Rank and a basis of the degree-``k`` part of the N-quotient.

    The listed family is tried first; when it is not independent modulo the
    relations (as happens in degree 4) the basis is completed greedily from
    the Lyndon basis.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    span = IncrementalSpan()
    for rel in n_relations(n, k):
        span.add(rel)
    relations_rank = span.rank
    lyndon = lyndon_basis(n, k)
    rank = len(lyndon) - relations_rank
    basis = []
    listed = listed_n_basis(n, k)
    for b in listed:
        if span.add(embed(b)):
            basis.append(b)
    listed_ok = len(basis) == len(listed) == rank
    for b in lyndon:
        if span.rank - relations_rank >= rank:
            break
        if span.add(embed(b)):
            basis.append(b)
    if len(basis) != rank:
        raise ArithmeticError(f"basis selection found {len(basis)} elements, expected {rank}")
    return NQuotient(n, k, rank, relations_rank, basis, listed_ok)
