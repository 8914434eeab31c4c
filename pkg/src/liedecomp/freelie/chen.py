"""The free metabelian (Chen) Lie algebra and its derivations.

Elements are sparse vectors over the basis of simple commutators
``[x_{i1}, x_{i2}, ..., x_{ik}]`` with ``i1 > i2 <= i3 <= ... <= ik``; a basis
element is keyed by its index tuple.  Degree-one elements are keyed ``(i,)``.

Straightening a simple commutator uses three rules: the tail after the
first two slots is symmetric, the first two slots are antisymmetric, and
``[a,b,c,...] = [a,c,b,...] - [b,c,a,...]`` (Jacobi).  With ``a > b > c`` one
Jacobi step already lands in the basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Mapping, Sequence

from .linalg import IncrementalSpan, rank_of_vectors
from .words import TensorVector, embed, left_normed, lyndon_basis

ChenKey = tuple[int, ...]


@lru_cache(maxsize=None)
def _straighten(indices: ChenKey) -> tuple[tuple[ChenKey, int], ...]:
    if len(indices) == 1:
        return ((indices, 1),)
    a, b = indices[0], indices[1]
    tail = tuple(sorted(indices[2:]))
    if a == b:
        return ()
    sign = 1
    if a < b:
        a, b, sign = b, a, -1
    if not tail or b <= tail[0]:
        return (((a, b) + tail, sign),)
    m, rest = tail[0], tail[1:]
    first = (a, m) + tuple(sorted(rest + (b,)))
    second = (b, m) + tuple(sorted(rest + (a,)))
    return ((first, sign), (second, -sign))


def straighten(indices: Sequence[int]) -> TensorVector:
    """Chen-basis coordinates of the simple commutator ``[x_{i1}, ..., x_{ik}]``."""
    return TensorVector(_straighten(tuple(indices)))


def chen_basis(n: int, k: int) -> list[ChenKey]:
    if k == 1:
        return [(i,) for i in range(1, n + 1)]
    out = []
    for q in range(1, n + 1):
        for p in range(q + 1, n + 1):
            for tail in combinations_with_replacement(range(q, n + 1), k - 2):
                out.append((p, q) + tail)
    return out


def chen_lift(key: ChenKey):
    """The simple commutator in the free Lie algebra representing ``key``."""
    return left_normed(key)


@dataclass(frozen=True)
class ChenQuotient:
    n: int
    k: int
    basis: list
    reduce: Callable[[Sequence[int]], TensorVector]

    @property
    def rank(self) -> int:
        return len(self.basis)


def quotient_basis_metabelian(n: int, k: int) -> ChenQuotient:
    if k < 1:
        raise ValueError("k must be >= 1")
    return ChenQuotient(n, k, chen_basis(n, k), straighten)


def second_derived_span(n: int, k: int) -> list[TensorVector]:
    """Embedded spanning set of ``[L', L']`` in degree ``k``."""
    out = []
    for i in range(2, k // 2 + 1):
        j = k - i
        left = lyndon_basis(n, i)
        right = lyndon_basis(n, j) if j != i else left
        for a_idx, u in enumerate(left):
            for b_idx, v in enumerate(right):
                if i == j and b_idx <= a_idx:
                    continue
                out.append(embed((u, v)))
    return out


def metabelian_rank_by_embedding(n: int, k: int) -> int:
    """``rank L(k) - rank [L',L'](k)``, computed inside the tensor algebra."""
    from ..decomp import witt_rank

    return witt_rank(n, k) - rank_of_vectors(second_derived_span(n, k))


def chen_basis_independent(n: int, k: int) -> bool:
    """Do the lifted Chen-basis commutators stay independent modulo ``[L',L']``?"""
    rel = second_derived_span(n, k)
    lifts = [embed(chen_lift(key)) for key in chen_basis(n, k)]
    return rank_of_vectors(rel + lifts) == rank_of_vectors(rel) + len(lifts)


# ---------------------------------------------------------------------------
# arithmetic


def _degree(vec: Mapping[ChenKey, int]) -> int | None:
    for key in vec:
        return len(key)
    return None


def bracket_with_generator(vec: Mapping[ChenKey, int], i: int) -> TensorVector:
    """``[vec, x_i]`` in the Chen algebra."""
    out = TensorVector()
    for key, c in vec.items():
        for new, s in _straighten(key + (i,)):
            out.add_term(new, c * s)
    return out


def chen_bracket(u: Mapping[ChenKey, int], v: Mapping[ChenKey, int]) -> TensorVector:
    du, dv = _degree(u), _degree(v)
    if du is None or dv is None:
        return TensorVector()
    if du >= 2 and dv >= 2:
        return TensorVector()
    if dv == 1:
        out = TensorVector()
        for (i,), c in v.items():
            out = out + c * bracket_with_generator(u, i)
        return out
    return -chen_bracket(v, u)


def bracket_tail(vec: Mapping[ChenKey, int], tail: Iterable[int]) -> TensorVector:
    out = TensorVector(vec)
    for i in tail:
        out = bracket_with_generator(out, i)
    return out


# ---------------------------------------------------------------------------
# derivations


def apply_derivation(f: Mapping[int, Mapping[ChenKey, int]], vec: Mapping[ChenKey, int]) -> TensorVector:
    """Extend ``f`` from generators by the Leibniz rule.

    On ``[x_p, x_q, t_1, ..., t_l]`` only the first two slots contribute,
    since ``f(t_j)`` has degree at least two and brackets of two elements of
    degree at least two vanish.
    """
    out = TensorVector()
    for key, c in vec.items():
        if len(key) == 1:
            image = f.get(key[0])
            if image:
                out = out + c * TensorVector(image)
            continue
        p, q, tail = key[0], key[1], key[2:]
        if f.get(p):
            out = out + c * bracket_tail(bracket_with_generator(f[p], q), tail)
        if f.get(q):
            out = out - c * bracket_tail(bracket_with_generator(f[q], p), tail)
    return out


def derivation_bracket_chen(f: Mapping[int, Mapping], g: Mapping[int, Mapping], n: int) -> dict[int, TensorVector]:
    out = {}
    for i in range(1, n + 1):
        value = TensorVector()
        if g.get(i):
            value = value + apply_derivation(f, g[i])
        if f.get(i):
            value = value - apply_derivation(g, f[i])
        if value:
            out[i] = value
    return out


def chen_der_basis(n: int, k: int) -> list[tuple[int, ChenKey]]:
    """Basis ``x_a^* (x) b`` of degree-``k`` Chen derivations."""
    return [(a, key) for a in range(1, n + 1) for key in chen_basis(n, k + 1)]


def _bracket_of_basis(f: tuple[int, ChenKey], g: tuple[int, ChenKey]) -> dict:
    a, u = f
    b, v = g
    fd = {a: {u: 1}}
    gd = {b: {v: 1}}
    out = TensorVector()
    for key, c in apply_derivation(fd, {v: 1}).items():
        out.add_term((b, key), c)
    for key, c in apply_derivation(gd, {u: 1}).items():
        out.add_term((a, key), -c)
    return out


def commutator_span(n: int, k: int) -> IncrementalSpan:
    """Span of all brackets of lower-degree Chen derivations landing in degree ``k``."""
    span = IncrementalSpan()
    for i in range(1, k // 2 + 1):
        j = k - i
        left = chen_der_basis(n, i)
        right = chen_der_basis(n, j) if j != i else left
        for a_idx, f in enumerate(left):
            for b_idx, g in enumerate(right):
                if i == j and b_idx <= a_idx:
                    continue
                vec = _bracket_of_basis(f, g)
                if vec:
                    span.add(vec)
    return span


def chen_der_abelianization_rank(n: int, k: int) -> int:
    """Rank of the degree-``k`` abelianization of the Chen derivation algebra."""
    from ..decomp import chen_rank

    if n < 4 or k < 2:
        raise ValueError(f"requires n ≥ 4 and k ≥ 2, got n={n}, k={k}")
    return n * chen_rank(n, k + 1) - commutator_span(n, k).rank


def der_element(terms: Iterable[tuple[int, Sequence[int], int]]) -> dict:
    """Flattened ``sum c * x_i^* (x) [x_{j1}, ...]`` straightened into Chen coordinates."""
    out = TensorVector()
    for i, indices, c in terms:
        for key, s in straighten(indices).items():
            out.add_term((i, key), c * s)
    return out
