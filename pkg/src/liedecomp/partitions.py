"""Partitions, Young tableaux and the Weyl dimension formula.

Partitions are immutable tuples of positive parts.  Canonical order for
listings is reverse lexicographic: ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  The empty partition is a genuine value.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,2,1"``, ``"0"``, ``"(2,1^2)"`` or ``"2^2,1"``."""
        text = text.strip().strip("()").replace(" ", "")
        if text in ("", "0"):
            return cls()
        parts: list[int] = []
        for token in text.split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if m is None:
                raise ValueError(f"cannot parse partition {text!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(parts)

    def weight(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: Sequence[int]) -> bool:
        """True when the diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def pretty(self) -> str:
        """Exponent notation used in decomposition tables, e.g. ``(2^2,1^3)``."""
        if not self:
            return "(0)"
        chunks = []
        i = 0
        while i < len(self):
            j = i
            while j < len(self) and self[j] == self[i]:
                j += 1
            run = j - i
            chunks.append(f"{self[i]}^{run}" if run > 1 else str(self[i]))
            i = j
        return "(" + ",".join(chunks) + ")"


def partition_sort_key(p: Sequence[int]):
    """Key realising reverse lexicographic order within a fixed size."""
    return tuple(-x for x in p)


def enumerate_partitions(m: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    limit = m if max_length is None else max_length
    return list(_partitions(m, m, limit))


@lru_cache(maxsize=None)
def _partitions(m: int, largest: int, length: int) -> tuple[Partition, ...]:
    if m == 0:
        return (Partition(),)
    if length == 0:
        return ()
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first, length - 1):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def add_vertical_strip(mu: Sequence[int], k: int, n: int | None = None) -> list[Partition]:
    """Partitions obtained from ``mu`` by adding a vertical ``k``-strip.

    With ``n`` given, results are limited to at most ``n`` rows.  A vertical
    strip adds at most one box per row, so the choice is a set of ``k`` rows
    among the first ``len(mu) + k``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    mu = Partition(mu)
    rows = len(mu) + k if n is None else min(len(mu) + k, n)
    base = mu.padded(max(rows, len(mu)))
    out = set()
    for chosen in combinations(range(rows), k):
        cand = list(base)
        for r in chosen:
            cand[r] += 1
        if all(a >= b for a, b in zip(cand, cand[1:])):
            out.add(Partition(cand))
    return sorted(out, key=partition_sort_key)


def remove_vertical_strip(lam: Sequence[int], k: int) -> list[Partition]:
    """Partitions ``mu`` with ``lam / mu`` a vertical ``k``-strip."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    lam = Partition(lam)
    out = set()
    for chosen in combinations(range(len(lam)), k):
        cand = list(lam)
        for r in chosen:
            cand[r] -= 1
        if all(a >= b for a, b in zip(cand, cand[1:])):
            out.add(Partition(cand))
    return sorted(out, key=partition_sort_key)


def hook_lengths(lam: Sequence[int]) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@lru_cache(maxsize=None)
def _hook_count(lam: Partition) -> int:
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def count_standard_tableaux(lam: Sequence[int]) -> int:
    """``f^lam`` by the hook length formula."""
    return _hook_count(Partition(lam))


@dataclass(frozen=True)
class StandardTableau:
    """Row-wise filling of ``shape`` by ``1..m``, increasing along rows and columns."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("row lengths do not match the shape")
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("entries must be exactly 1..m")
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if c and row[c - 1] >= x:
                    raise ValueError("rows must increase")
                if r and self.rows[r - 1][c] >= x:
                    raise ValueError("columns must increase")

    @cached_property
    def _row_of(self) -> dict[int, int]:
        return {x: r for r, row in enumerate(self.rows) for x in row}

    def descent_set(self) -> frozenset[int]:
        """Entries ``i`` with ``i + 1`` in a strictly lower row."""
        where = self._row_of
        return frozenset(i for i in range(1, len(where)) if where[i + 1] > where[i])

    def major_index(self) -> int:
        return sum(self.descent_set())


def standard_tableaux(lam: Sequence[int]) -> Iterator[StandardTableau]:
    """Lazily yield every standard tableau of shape ``lam``.

    Entries are placed in increasing order; entry ``t`` may go at the end of
    any row whose length is still below the target and below the row above.
    """
    shape = Partition(lam)
    m = shape.weight()
    rows: list[list[int]] = [[] for _ in shape]

    def place(t: int) -> Iterator[StandardTableau]:
        if t > m:
            yield StandardTableau(shape, tuple(tuple(r) for r in rows))
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(t)
                yield from place(t + 1)
                rows[r].pop()

    return place(1)


def major_index(tableau: StandardTableau) -> int:
    return tableau.major_index()


def semistandard_tableaux(lam: Sequence[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Lazily yield semistandard tableaux of shape ``lam`` with entries in ``1..n``.

    Cells are filled row by row; each entry is at least its left neighbour
    and strictly larger than the entry above.
    """
    shape = Partition(lam)
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    grid = [[0] * part for part in shape]
    col_len = conjugate(shape)

    def fill(idx: int):
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        low = 1
        if c:
            low = max(low, grid[r][c - 1])
        if r:
            low = max(low, grid[r - 1][c] + 1)
        # rows below still need room for strictly increasing columns
        high = n - (col_len[c] - r - 1)
        for v in range(low, high + 1):
            grid[r][c] = v
            yield from fill(idx + 1)

    return fill(0)


def is_dominant(weight: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(weight, weight[1:]))


def weyl_dimension(weight: Sequence[int], n: int | None = None) -> int:
    """Dimension of the irreducible GL(n) module with the given highest weight.

    ``weight`` may be shorter than ``n`` (it is zero-padded) and may contain
    negative entries.
    """
    w = tuple(weight)
    if n is None:
        n = len(w)
    if len(w) > n:
        if any(w[n:]):
            raise ValueError(f"weight {w} has more than {n} nonzero entries")
        w = w[:n]
    w = w + (0,) * (n - len(w))
    if not is_dominant(w):
        raise ValueError(f"weight {w} is not dominant")
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(w[i] - w[j] + j - i, j - i)
    if dim.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {dim} for {w}")
    return int(dim)
