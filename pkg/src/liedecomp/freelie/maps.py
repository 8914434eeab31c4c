"""Contraction and trace maps as exact matrices.

The domain ``H* (x) L(k+1)`` has basis ``x_i^* (x) b`` with ``b`` running over
the Lyndon basis; columns are ordered by ``i`` first.  The Chen domain uses
the Chen basis of ``L^M(k+1)`` lifted to simple commutators.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product
from typing import NamedTuple

from .chen import chen_basis, chen_lift
from .linalg import ExactMatrix
from .words import TensorVector, embed, lyndon_basis


def contract(i: int, vec: TensorVector) -> TensorVector:
    """``x_i^*`` paired with the first tensor slot."""
    out = TensorVector()
    for word, c in vec.items():
        if word[0] == i:
            out.add_term(word[1:], c)
    return out


def _free_domain(n: int, k: int) -> list[tuple[int, object]]:
    return [(i, b) for i in range(1, n + 1) for b in lyndon_basis(n, k + 1)]


def _chen_domain(n: int, k: int) -> list[tuple[int, object]]:
    return [(i, chen_lift(key)) for i in range(1, n + 1) for key in chen_basis(n, k + 1)]


def _contracted(domain) -> list[TensorVector]:
    return [contract(i, embed(b)) for i, b in domain]


def contraction_matrix(n: int, k: int) -> ExactMatrix:
    """Matrix of the contraction ``H* (x) L(k+1) -> H^(x)k``; rows are words in lex order."""
    rows = {w: idx for idx, w in enumerate(product(range(1, n + 1), repeat=k))}
    return ExactMatrix.from_columns(_contracted(_free_domain(n, k)), rows)


def symmetrize(vec: TensorVector) -> TensorVector:
    """Projection ``H^(x)k -> S^k H``; monomials are sorted index tuples."""
    out = TensorVector()
    for word, c in vec.items():
        out.add_term(tuple(sorted(word)), c)
    return out


def _perm_sign(word) -> int:
    sign = 1
    w = list(word)
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                sign = -sign
    return sign


def antisymmetrize(vec: TensorVector) -> TensorVector:
    """Projection ``H^(x)k -> Lambda^k H``; wedge monomials are increasing tuples."""
    out = TensorVector()
    for word, c in vec.items():
        if len(set(word)) == len(word):
            out.add_term(tuple(sorted(word)), _perm_sign(word) * c)
    return out


class TraceMatrices(NamedTuple):
    sym: ExactMatrix
    alt: ExactMatrix
    chen_sym: ExactMatrix


def trace_matrices(n: int, k: int) -> TraceMatrices:
    """``Tr_[k]``, ``Tr_[1^k]`` on the free domain and ``Tr^M_[k]`` on the Chen domain."""
    sym_rows = {m: i for i, m in enumerate(combinations_with_replacement(range(1, n + 1), k))}
    alt_rows = {m: i for i, m in enumerate(combinations(range(1, n + 1), k))}
    free = _contracted(_free_domain(n, k))
    chen = _contracted(_chen_domain(n, k))
    return TraceMatrices(
        ExactMatrix.from_columns([symmetrize(v) for v in free], sym_rows),
        ExactMatrix.from_columns([antisymmetrize(v) for v in free], alt_rows),
        ExactMatrix.from_columns([symmetrize(v) for v in chen], sym_rows),
    )


def contraction_kernel_dim(n: int, k: int) -> int:
    m = contraction_matrix(n, k)
    return m.ncols - m.rank()
