"""Sparse exact matrices and fraction-free rank.

Rows are scaled to primitive integer vectors, split into independent blocks
(connected components of the row/column incidence graph), and reduced one
block at a time.  Within a block each incoming row is eliminated against the
existing pivots by integer cross-multiplication and then divided by the gcd
of its entries, so entries never become fractions and stay small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

Row = dict[int, int]


class ExactMatrix:
    """Sparse matrix over the rationals stored row-wise."""

    def __init__(self, nrows: int, ncols: int, entries: Mapping[tuple[int, int], object] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in (entries or {}).items():
            self[r, c] = v

    def __setitem__(self, rc: tuple[int, int], value) -> None:
        r, c = rc
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(f"entry ({r},{c}) outside {self.nrows}x{self.ncols}")
        value = Fraction(value)
        row = self.rows.setdefault(r, {})
        if value:
            row[c] = value
        else:
            row.pop(c, None)
            if not row:
                del self.rows[r]

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.rows.get(r, {}).get(c, Fraction(0))

    def add(self, r: int, c: int, value) -> None:
        self[r, c] = self[r, c] + value

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[Hashable, object]],
                     row_index: Mapping[Hashable, int] | None = None) -> "ExactMatrix":
        """Build a matrix whose ``j``-th column is the sparse vector ``columns[j]``.

        Row keys are mapped to indices by ``row_index`` (built on the fly in
        sorted key order when omitted).
        """
        if row_index is None:
            keys = sorted({key for col in columns for key in col})
            row_index = {key: i for i, key in enumerate(keys)}
        m = cls(len(row_index), len(columns))
        for j, col in enumerate(columns):
            for key, v in col.items():
                if v:
                    m.rows.setdefault(row_index[key], {})[j] = Fraction(v)
        return m

    def entries(self) -> list[tuple[int, int, Fraction]]:
        return [(r, c, v) for r in sorted(self.rows) for c, v in sorted(self.rows[r].items())]

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def transpose(self) -> "ExactMatrix":
        t = ExactMatrix(self.ncols, self.nrows)
        for r, c, v in self.entries():
            t.rows.setdefault(c, {})[r] = v
        return t

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "ExactMatrix":
        p = ExactMatrix(self.nrows, self.ncols)
        for r, c, v in self.entries():
            p.rows.setdefault(row_perm[r], {})[col_perm[c]] = v
        return p

    def rank(self) -> int:
        return exact_rank(self)

    def dump(self, path) -> None:
        """Write the sparse triple format: a ``nrows ncols`` header, then ``row col num/den``."""
        with open(path, "w") as fh:
            fh.write(f"{self.nrows} {self.ncols}\n")
            for r, c, v in self.entries():
                fh.write(f"{r} {c} {v.numerator}/{v.denominator}\n")

    @classmethod
    def load(cls, path) -> "ExactMatrix":
        with open(path) as fh:
            nrows, ncols = map(int, fh.readline().split())
            m = cls(nrows, ncols)
            for line in fh:
                if line.strip():
                    r, c, v = line.split()
                    m[int(r), int(c)] = Fraction(v)
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries()) == (other.nrows, other.ncols, other.entries())

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def _primitive(row: Mapping[int, object]) -> Row:
    """Scale a rational row to a primitive integer row."""
    fracs = {c: Fraction(v) for c, v in row.items() if v}
    if not fracs:
        return {}
    den = lcm(*(f.denominator for f in fracs.values()))
    ints = {c: int(f * den) for c, f in fracs.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {c: v // g for c, v in ints.items()}


def _components(rows: list[Row]) -> list[list[int]]:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in rows:
        cols = iter(row)
        first = find(next(cols))
        for c in cols:
            other = find(c)
            if other != first:
                parent[other] = first
    groups: dict[int, list[int]] = {}
    for idx, row in enumerate(rows):
        groups.setdefault(find(next(iter(row))), []).append(idx)
    return [groups[key] for key in sorted(groups)]


def _block_rank(rows: list[Row]) -> int:
    pivots: dict[int, Row] = {}
    for row in sorted(rows, key=lambda r: (len(r), min(r))):
        row = dict(row)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                break
            a, b = pivot[lead], row[lead]
            g = gcd(a, b)
            sa, sb = a // g, b // g
            new: Row = {c: sa * v for c, v in row.items()}
            for c, v in pivot.items():
                value = new.get(c, 0) - sb * v
                if value:
                    new[c] = value
                else:
                    new.pop(c, None)
            content = 0
            for v in new.values():
                content = gcd(content, v)
                if content == 1:
                    break
            row = {c: v // content for c, v in new.items()} if content > 1 else new
    return len(pivots)


def rank_of_rows(rows: Iterable[Mapping[int, object]]) -> int:
    """Rank of a family of sparse rational vectors indexed by integers."""
    prim = [r for r in (_primitive(row) for row in rows) if r]
    if not prim:
        return 0
    return sum(_block_rank([prim[i] for i in comp]) for comp in _components(prim))


def exact_rank(m: ExactMatrix) -> int:
    """Rank over Q, deterministic and independent of row/column order."""
    return rank_of_rows(m.rows[r] for r in sorted(m.rows))


def rank_of_vectors(vectors: Iterable[Mapping[Hashable, object]]) -> int:
    """Rank of sparse vectors keyed by arbitrary hashable coordinates."""
    index: dict[Hashable, int] = {}
    rows = []
    for vec in vectors:
        rows.append({index.setdefault(key, len(index)): v for key, v in vec.items() if v})
    return rank_of_rows(rows)


class IncrementalSpan:
    """Echelon basis that grows one vector at a time (for greedy basis selection)."""

    def __init__(self):
        self._index: dict[Hashable, int] = {}
        self._pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _reduce(self, vec: Mapping[Hashable, object]) -> Row:
        row = _primitive({self._index.setdefault(k, len(self._index)): v for k, v in vec.items() if v})
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return row
            a, b = pivot[lead], row[lead]
            g = gcd(a, b)
            new = {c: (a // g) * v for c, v in row.items()}
            for c, v in pivot.items():
                value = new.get(c, 0) - (b // g) * v
                if value:
                    new[c] = value
                else:
                    new.pop(c, None)
            row = _primitive(new)
        return row

    def contains(self, vec: Mapping[Hashable, object]) -> bool:
        return not self._reduce(vec)

    def add(self, vec: Mapping[Hashable, object]) -> bool:
        """Add ``vec``; return True when it was independent of the span so far."""
        row = self._reduce(vec)
        if not row:
            return False
        self._pivots[min(row)] = row
        return True
