"""Decomposition formulas for derivation algebras and Johnson images.

Every function returns a :class:`~liedecomp.symfunc.Decomposition` pinned to
the rank ``n`` it was asked for.  Labels such as ``(k-3,2,1)`` only appear
when they are genuine partitions; small-degree rows with a negative part are
dropped.
"""

from __future__ import annotations

from collections import Counter
from math import comb
from typing import Sequence

from .characters import cyclic_branching, divisors, euler_phi, mobius
from .partitions import (
    Partition,
    count_standard_tableaux,
    enumerate_partitions,
    remove_vertical_strip,
)
from .symfunc import Decomposition, RationalLabel, rational_tensor


class PreconditionError(ValueError):
    """A stability bound such as ``n >= k+2`` is not met."""


def _require_stable(k: int, n: int) -> None:
    if k < 1:
        raise PreconditionError(f"degree k must be >= 1, got k={k}")
    if n < k + 2:
        raise PreconditionError(f"requires n ≥ k+2 (k={k} needs n ≥ {k + 2}, got n={n})")


def _labels(terms: Sequence[tuple[int, Sequence[int], Sequence[int]]], n: int) -> Decomposition:
    """Build a decomposition from ``(mult, pos, neg)`` triples, skipping invalid shapes."""
    out: Counter = Counter()
    for mult, pos, neg in terms:
        if any(p < 0 for p in pos) or any(a < b for a, b in zip(pos, pos[1:])):
            continue
        label = RationalLabel(Partition(pos), Partition(neg))
        if label.min_rank() <= n:
            out[label] += mult
    return Decomposition(out, n)


# ---------------------------------------------------------------------------
# rank formulas


def witt_rank(n: int, k: int) -> int:
    if n < 1 or k < 1:
        raise ValueError("witt_rank needs n >= 1 and k >= 1")
    total = sum(mobius(d) * n ** (k // d) for d in divisors(k))
    return total // k


def chen_rank(n: int, k: int) -> int:
    """Rank of the degree-``k`` part of the free metabelian Lie algebra."""
    if k < 1:
        raise ValueError("chen_rank needs k >= 1")
    if k == 1:
        # the closed formula vanishes here; degree one is H itself
        return n
    return (k - 1) * comb(n + k - 2, k)


def n_rank(n: int, k: int) -> int:
    """Rank of the degree-``k`` part of the N-quotient.

    The defining relations start in degree 6, so up to degree 5 this is the
    Witt rank.  The closed formula is used from degree 5 on (where the two
    agree).
    """
    if k < 1:
        raise ValueError("n_rank needs k >= 1")
    if k <= 4:
        return witt_rank(n, k)
    return (k - 1) * comb(k + n - 2, k) + n * (n - 1) * (k - 3) * comb(n + k - 4, k - 2) // 2


def necklace_count(n: int, k: int) -> int:
    """Dimension of the cyclic coinvariants of ``H^(x)k``."""
    return sum(euler_phi(d) * n ** (k // d) for d in divisors(k)) // k


# ---------------------------------------------------------------------------
# free Lie algebra and cyclic coinvariants


def free_lie_decomposition(m: int, n: int) -> Decomposition:
    """Degree-``m`` part of the free Lie algebra on ``H``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return Decomposition(
        {lam: cyclic_branching(lam, 1) for lam in enumerate_partitions(m, n)}, n)


def cokernel_decomposition(k: int, n: int) -> Decomposition:
    """``C_n(k)``: the cyclic coinvariants of ``H^(x)k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Decomposition(
        {lam: cyclic_branching(lam, 0) for lam in enumerate_partitions(k, n)}, n)


def johnson_cokernel(k: int, n: int) -> Decomposition:
    """Cokernel of the rational Johnson map in degree ``k``.

    Equal to ``C_n(k)`` for ``k >= 2``; the degree-one map is onto, so the
    cokernel vanishes there.
    """
    _require_stable(k, n)
    if k == 1:
        return Decomposition(n=n)
    return cokernel_decomposition(k, n)


def hstar_tensor_lie_decomposition(m: int, n: int) -> Decomposition:
    """Polynomial part of ``H* (x) L(m)``.

    For ``lam`` of size ``m-1``, the multiplicity sums ``[L^mu : L(m)]`` over
    the ``mu`` obtained by removing a vertical ``(n-1)``-strip from
    ``(lam_1+1, ..., lam_n+1)``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    lie = free_lie_decomposition(m, n)
    out = {}
    for lam in enumerate_partitions(m - 1, n):
        raised = tuple(x + 1 for x in lam.padded(n))
        out[lam] = sum(lie[mu] for mu in remove_vertical_strip(raised, n - 1)
                       if len(mu) <= n)
    return Decomposition(out, n)


def hstar_tensor_rational(module: Decomposition, n: int) -> Decomposition:
    """``H* (x) module`` by the rational tensor product theorem, summand by summand."""
    out = Decomposition(n=n)
    dual = RationalLabel(Partition(), Partition((1,)))
    for label, mult in module.items():
        out = out + mult * rational_tensor(dual, label, n)
    return out


def der_decomposition(k: int, n: int) -> Decomposition:
    """Degree-``k`` derivations of the free Lie algebra, ``H* (x) L(k+1)``.

    The polynomial part is ``H^(x)k``; the rest is ``sum [L^mu:L(k+1)] {mu;(1)}``.
    """
    _require_stable(k, n)
    out: Counter = Counter()
    for lam in enumerate_partitions(k, n):
        out[RationalLabel(lam)] = count_standard_tableaux(lam)
    for mu, mult in free_lie_decomposition(k + 1, n).items():
        if mu.min_rank() + 1 <= n:
            out[RationalLabel(mu.pos, Partition((1,)))] += mult
    return Decomposition(out, n)


def johnson_image_decomposition(k: int, n: int) -> Decomposition:
    """Image of the rational Johnson map: derivations minus the cokernel."""
    return der_decomposition(k, n) - johnson_cokernel(k, n)


# ---------------------------------------------------------------------------
# Chen Lie algebra


def chen_lie_decomposition(k: int, n: int) -> Decomposition:
    if k == 1:
        return _labels([(1, (1,), ())], n)
    return _labels([(1, (k - 1, 1), ())], n)


def chen_der_decomposition(k: int, n: int) -> Decomposition:
    _require_stable(k, n)
    return _labels([(1, (k, 1), (1,)), (1, (k,), ()), (1, (k - 1, 1), ())], n)


def chen_johnson_image(k: int, n: int) -> Decomposition:
    _require_stable(k, n)
    if k == 1:
        return chen_der_decomposition(k, n)
    return _labels([(1, (k, 1), (1,)), (1, (k - 1, 1), ())], n)


def chen_abelianization_rank(k: int, n: int) -> int:
    """Rank of the abelianization of the Chen derivation algebra in degree ``k``."""
    if n < 4:
        raise PreconditionError(f"requires n ≥ 4, got n={n}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return n * comb(n, 2)
    return comb(n + k - 1, k)


# ---------------------------------------------------------------------------
# N-quotient


def n_lie_decomposition(k: int, n: int) -> Decomposition:
    """Degree-``k`` part of the N-quotient (equal to the free part below degree 6)."""
    if k <= 5:
        return free_lie_decomposition(k, n)
    return _labels([(1, (k - 1, 1), ()), (1, (k - 2, 2), ()), (1, (k - 2, 1, 1), ()),
                    (1, (k - 3, 2, 1), ()), (1, (k - 3, 1, 1, 1), ())], n)


def n_der_decomposition(k: int, n: int) -> tuple[Decomposition, Decomposition]:
    """Polynomial part ``W1`` and non-polynomial part ``W2`` of ``H* (x) L^N(k+1)``."""
    _require_stable(k, n)
    if k <= 3:
        full = der_decomposition(k, n)
        return full.polynomial_part(), full.non_polynomial_part()
    w1 = _labels([(1, (k,), ()), (3, (k - 1, 1), ()), (2, (k - 2, 2), ()),
                  (3, (k - 2, 1, 1), ()), (1, (k - 3, 2, 1), ()), (1, (k - 3, 1, 1, 1), ())], n)
    w2 = _labels([(1, (k, 1), (1,)), (1, (k - 1, 2), (1,)), (1, (k - 1, 1, 1), (1,)),
                  (1, (k - 2, 2, 1), (1,)), (1, (k - 2, 1, 1, 1), (1,))], n)
    return w1, w2


def n_johnson_cokernel(k: int, n: int) -> Decomposition:
    _require_stable(k, n)
    if k <= 4:
        return johnson_cokernel(k, n)
    return _labels([(1, (k,), ()), (1, (k - 2, 1, 1), ())], n)


def n_johnson_image(k: int, n: int) -> Decomposition:
    """Image of the Johnson map followed by projection to the N-quotient."""
    _require_stable(k, n)
    if k <= 4:
        return johnson_image_decomposition(k, n)
    w1, w2 = n_der_decomposition(k, n)
    return w1 - n_johnson_cokernel(k, n) + w2


# ---------------------------------------------------------------------------


def invariant_hom_mult(k: int, n: int) -> int:
    """Multiplicity of ``Lambda^k H`` in ``H* (x) L(k+1)``.

    By the trivial-multiplicity pairing this is also the dimension of the
    invariant homomorphisms from ``H* (x) L(k+1)`` to ``Lambda^k H``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > n:
        return 0
    return hstar_tensor_lie_decomposition(k + 1, n)[(1,) * k]
