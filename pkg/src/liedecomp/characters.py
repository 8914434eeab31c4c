"""Symmetric group characters and branching to the cyclic subgroup C_m.

The cyclic subgroup is generated by the long cycle ``(1 2 ... m)``.  Its
power ``sigma^i`` has ``gcd(i, m)`` cycles of length ``m / gcd(i, m)``, so
``chi^lam(sigma^i)`` depends only on that gcd.  Summing the roots of unity
over each gcd class gives a Ramanujan sum, which keeps every branching
multiplicity an exact integer computation.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Sequence

from .partitions import Partition, standard_tableaux

CycleType = Partition


def divisors(m: int) -> list[int]:
    if m < 1:
        raise ValueError("divisors of a nonpositive integer")
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def mobius(d: int) -> int:
    if d < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    return -result if d > 1 else result


def euler_phi(d: int) -> int:
    return sum(1 for i in range(1, d + 1) if gcd(i, d) == 1)


def ramanujan_sum(q: int, j: int) -> int:
    """``c_q(j)``: sum of ``zeta^(j*u)`` over primitive ``q``-th roots ``zeta^u``."""
    g = gcd(q, j)
    return sum(d * mobius(q // d) for d in divisors(g))


def power_cycle_type(m: int, i: int) -> CycleType:
    """Cycle type of ``(1 2 ... m)^i``."""
    g = gcd(i, m)
    return CycleType((m // g,) * g)


def mn_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """Irreducible character ``chi^lam`` at cycle type ``rho`` (Murnaghan-Nakayama)."""
    lam = Partition(lam)
    rho = CycleType(sorted(rho, reverse=True))
    if lam.weight() != rho.weight():
        raise ValueError(f"|{lam}| != |{rho}|")
    return _mn(lam, rho)


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: CycleType) -> int:
    if not rho:
        return 1
    r, rest = rho[0], CycleType(rho[1:])
    # beta-numbers: removing a rim hook of length r moves one bead down by r;
    # the sign counts the beads jumped over
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = sorted(beta[:idx] + [target] + beta[idx + 1:], reverse=True)
        new_lam = Partition(nb - (length - 1 - i) for i, nb in enumerate(new_beta))
        total += (-1) ** jumped * _mn(new_lam, rest)
    return total


def cyclic_branching_profile(lam: Sequence[int]) -> tuple[int, ...]:
    """Multiplicity of every ``chi_m^j`` in ``Res S^lam``, via major indices."""
    lam = Partition(lam)
    m = lam.weight()
    counts = [0] * max(m, 1)
    for tableau in standard_tableaux(lam):
        counts[tableau.major_index() % max(m, 1)] += 1
    return tuple(counts)


def cyclic_branching_kw(lam: Sequence[int], j: int) -> int:
    """Count standard tableaux of shape ``lam`` with ``maj(T) = j (mod m)``."""
    m = Partition(lam).weight()
    return cyclic_branching_profile(lam)[j % max(m, 1)]


@lru_cache(maxsize=None)
def _branching_char(lam: Partition, j: int) -> int:
    m = lam.weight()
    total = 0
    for d in divisors(m):
        q = m // d
        total += mn_character(lam, (q,) * d) * ramanujan_sum(q, j)
    mult, rem = divmod(total, m)
    if rem or mult < 0:
        raise ArithmeticError(f"character sum {total}/{m} for {lam}, j={j} is not a multiplicity")
    return mult


def cyclic_branching_char(lam: Sequence[int], j: int) -> int:
    """Same multiplicity as :func:`cyclic_branching_kw`, by character averaging.

    ``(1/m) * sum_{d | m} chi^lam((m/d)^d) * c_{m/d}(j)``.
    """
    lam = Partition(lam)
    m = lam.weight()
    if m == 0:
        return 1 if j == 0 else 0
    return _branching_char(lam, j % m)


# decomposition formulas use the character route; the tableau route stays as its check
cyclic_branching = cyclic_branching_char

