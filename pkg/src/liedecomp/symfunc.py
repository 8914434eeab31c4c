"""GL(n) labels, decompositions and Schur-function combinatorics.

Irreducible rational GL(n)-modules are labelled by pairs ``{pos;neg}`` of
partitions with ``len(pos) + len(neg) <= n``; the highest weight is
``(pos_1, ..., pos_a, 0, ..., 0, -neg_b, ..., -neg_1)``.  A polynomial module
has empty ``neg``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .partitions import (
    Partition,
    add_vertical_strip,
    enumerate_partitions,
    is_dominant,
    partition_sort_key,
    weyl_dimension,
)

Weight = tuple[int, ...]


class NotACharacterError(ValueError):
    """A weight multiset failed to peel into irreducible characters."""


class NegativeMultiplicityError(ArithmeticError):
    """Subtracting decompositions produced a negative multiplicity."""


@dataclass(frozen=True)
class RationalLabel:
    pos: Partition = Partition()
    neg: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "pos", Partition(self.pos))
        object.__setattr__(self, "neg", Partition(self.neg))

    @classmethod
    def from_weight(cls, weight: Sequence[int]) -> "RationalLabel":
        if not is_dominant(weight):
            raise ValueError(f"weight {tuple(weight)} is not dominant")
        pos = [x for x in weight if x > 0]
        neg = [-x for x in reversed(weight) if x < 0]
        return cls(Partition(pos), Partition(neg))

    @classmethod
    def parse(cls, text: str) -> "RationalLabel":
        """Accepts ``"{3,1;1}"``, ``"{(3,1);(1)}"``, ``"{0;1}"`` and bare partitions."""
        text = text.strip()
        m = re.fullmatch(r"\{(.*);(.*)\}", text)
        if m:
            return cls(Partition.parse(m.group(1)), Partition.parse(m.group(2)))
        return cls(Partition.parse(text))

    @property
    def is_polynomial(self) -> bool:
        return not self.neg

    def min_rank(self) -> int:
        return len(self.pos) + len(self.neg)

    def weight(self, n: int) -> Weight:
        if self.min_rank() > n:
            raise ValueError(f"label {self} needs n >= {self.min_rank()}, got n={n}")
        middle = n - len(self.pos) - len(self.neg)
        return tuple(self.pos) + (0,) * middle + tuple(-x for x in reversed(self.neg))

    def dimension(self, n: int) -> int:
        return weyl_dimension(self.weight(n), n)

    def dual(self) -> "RationalLabel":
        return RationalLabel(self.neg, self.pos)

    def sort_key(self):
        return (
            self.neg.weight(),
            partition_sort_key(self.neg),
            -self.pos.weight(),
            partition_sort_key(self.pos),
        )

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.pos)
        return "{" + str(self.pos) + ";" + str(self.neg) + "}"

    def pretty(self) -> str:
        if self.is_polynomial:
            return self.pos.pretty()
        pos = self.pos.pretty() if self.pos else "0"
        return "{" + pos + ";" + self.neg.pretty() + "}"


LabelLike = Union[RationalLabel, Sequence[int], str]


def as_label(label: LabelLike) -> RationalLabel:
    if isinstance(label, RationalLabel):
        return label
    if isinstance(label, str):
        return RationalLabel.parse(label)
    return RationalLabel(Partition(label))


class Decomposition:
    """Finite multiset of irreducible labels, optionally pinned to a rank ``n``."""

    def __init__(self, terms: Mapping[LabelLike, int] | Iterable[tuple[LabelLike, int]] = (),
                 n: int | None = None):
        self.n = n
        self._terms: dict[RationalLabel, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, mult in items:
            label = as_label(label)
            if mult < 0:
                raise NegativeMultiplicityError(f"negative multiplicity {mult} for {label}")
            if mult == 0:
                continue
            if n is not None and label.min_rank() > n:
                raise ValueError(f"label {label} is not valid at n={n}")
            self._terms[label] = self._terms.get(label, 0) + mult

    def __getitem__(self, label: LabelLike) -> int:
        return self._terms.get(as_label(label), 0)

    def __contains__(self, label: LabelLike) -> bool:
        return self[label] > 0

    def __iter__(self) -> Iterator[RationalLabel]:
        return iter(sorted(self._terms, key=RationalLabel.sort_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[RationalLabel, int]]:
        return [(label, self._terms[label]) for label in self]

    def _rank(self, other: "Decomposition") -> int | None:
        if self.n is not None and other.n is not None and self.n != other.n:
            raise ValueError(f"rank mismatch: n={self.n} vs n={other.n}")
        return self.n if self.n is not None else other.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "Decomposition") -> "Decomposition":
        out = Counter(self._terms)
        out.update(other._terms)
        return Decomposition(out, self._rank(other))

    def __sub__(self, other: "Decomposition") -> "Decomposition":
        out = dict(self._terms)
        for label, mult in other._terms.items():
            left = out.get(label, 0) - mult
            if left < 0:
                raise NegativeMultiplicityError(
                    f"cannot remove {mult} x {label.pretty()} from {self}")
            out[label] = left
        return Decomposition(out, self._rank(other))

    def __mul__(self, k: int) -> "Decomposition":
        return Decomposition({label: k * m for label, m in self._terms.items()}, self.n)

    __rmul__ = __mul__

    def __le__(self, other: "Decomposition") -> bool:
        return all(other[label] >= m for label, m in self._terms.items())

    def dimension(self, n: int | None = None) -> int:
        n = self.n if n is None else n
        if n is None:
            raise ValueError("rank n is required for dimensions")
        return sum(m * label.dimension(n) for label, m in self._terms.items())

    def polynomial_part(self) -> "Decomposition":
        return Decomposition({l: m for l, m in self._terms.items() if l.is_polynomial}, self.n)

    def non_polynomial_part(self) -> "Decomposition":
        return Decomposition({l: m for l, m in self._terms.items() if not l.is_polynomial}, self.n)

    def restricted(self, n: int) -> "Decomposition":
        """Drop labels that do not exist at rank ``n``."""
        return Decomposition({l: m for l, m in self._terms.items() if l.min_rank() <= n}, n)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " ⊕ ".join((f"{m}" if m > 1 else "") + label.pretty() for label, m in self.items())

    def __repr__(self) -> str:
        return f"Decomposition({str(self)!r}, n={self.n})"

    @classmethod
    def parse(cls, text: str, n: int | None = None, neg: Sequence[int] = ()) -> "Decomposition":
        """Parse table notation such as ``"(4) ⊕ 2(2,1^2)"``.

        ``neg`` is attached to every bare partition, so the non-polynomial
        column of a table, written as ``(mu)`` for ``{mu;(1)}``, parses with
        ``neg=(1,)``.
        """
        text = text.strip()
        if text in ("", "0"):
            return cls(n=n)
        terms: Counter = Counter()
        for chunk in re.split(r"⊕|\\oplus|\+", text):
            chunk = chunk.strip()
            if not chunk:
                continue
            m = re.fullmatch(r"(\d*)\s*(\{.*\}|\(.*\))", chunk)
            if m is None:
                raise ValueError(f"cannot parse summand {chunk!r}")
            mult = int(m.group(1) or 1)
            body = m.group(2)
            if body.startswith("{"):
                label = RationalLabel.parse(body)
            else:
                label = RationalLabel(Partition.parse(body), Partition(neg))
            terms[label] += mult
        return cls(terms, n)


def polynomial(terms: Mapping[Sequence[int], int], n: int | None = None) -> Decomposition:
    return Decomposition({RationalLabel(Partition(p)): m for p, m in terms.items()}, n)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


def lr_coefficient(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> int:
    """``c^lam_{mu,nu}``: number of LR tableaux of shape ``lam/mu`` and content ``nu``."""
    return _lr(Partition(mu), Partition(nu), Partition(lam))


@lru_cache(maxsize=None)
def _lr(mu: Partition, nu: Partition, lam: Partition) -> int:
    if lam.weight() != mu.weight() + nu.weight() or not lam.contains(mu) or not lam.contains(nu):
        return 0
    if not nu:
        return 1
    inner = mu.padded(len(lam))
    # reverse reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r] - 1, inner[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    used = [0] * len(nu)

    def count(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        high = min(len(nu), r + 1)
        right = filling.get((r, c + 1))
        if right is not None:
            high = min(high, right)
        low = 1
        above = filling.get((r - 1, c))
        if above is not None:
            low = above + 1
        total = 0
        for v in range(low, high + 1):
            if used[v - 1] >= nu[v - 1]:
                continue
            if v > 1 and used[v - 1] + 1 > used[v - 2]:
                continue
            used[v - 1] += 1
            filling[(r, c)] = v
            total += count(idx + 1)
            del filling[(r, c)]
            used[v - 1] -= 1
        return total

    return count(0)


@lru_cache(maxsize=None)
def _product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    size = mu.weight() + nu.weight()
    out = []
    for lam in enumerate_partitions(size, len(mu) + len(nu)):
        c = _lr(mu, nu, lam)
        if c:
            out.append((lam, c))
    return tuple(out)


def lr_product(mu: Sequence[int], nu: Sequence[int]) -> dict[Partition, int]:
    """Expansion of ``s_mu * s_nu`` in Schur functions (no length cutoff)."""
    return dict(_product(Partition(mu), Partition(nu)))


@lru_cache(maxsize=None)
def _skew(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    if not outer.contains(inner):
        return ()
    out = []
    for alpha in enumerate_partitions(outer.weight() - inner.weight(), len(outer)):
        c = _lr(inner, alpha, outer)
        if c:
            out.append((alpha, c))
    return tuple(out)


def skew_expansion(outer: Sequence[int], inner: Sequence[int]) -> dict[Partition, int]:
    """``alpha -> c^outer_{inner,alpha}``, i.e. the Schur expansion of ``s_{outer/inner}``."""
    return dict(_skew(Partition(outer), Partition(inner)))


def _subpartitions(a: Partition, b: Partition) -> Iterator[Partition]:
    """Partitions contained in both ``a`` and ``b``."""
    bound = [min(x, y) for x, y in zip(a, b)]

    def rec(i: int, cap: int, acc: list[int]):
        yield Partition(acc)
        if i == len(bound):
            return
        for part in range(min(cap, bound[i]), 0, -1):
            acc.append(part)
            yield from rec(i + 1, part, acc)
            acc.pop()

    return rec(0, bound[0] if bound else 0, [])


def pieri_vertical(mu: Sequence[int], k: int, n: int) -> Decomposition:
    """``L^(1^k) (x) L^mu`` by adding vertical strips."""
    if len(Partition(mu)) > n:
        raise ValueError(f"length of {tuple(mu)} exceeds n={n}")
    return Decomposition({lam: 1 for lam in add_vertical_strip(mu, k, n)}, n)


def _pair_table(first: Partition, second: Partition) -> dict[tuple[Partition, Partition], int]:
    """``(a, b) -> sum_k c^first_{k,a} c^second_{k,b}``."""
    table: Counter = Counter()
    for kappa in _subpartitions(first, second):
        left = _skew(first, kappa)
        right = _skew(second, kappa)
        for a, ca in left:
            for b, cb in right:
                table[(a, b)] += ca * cb
    return dict(table)


def koike_coefficient(a: LabelLike, b: LabelLike, target: LabelLike) -> int:
    """Multiplicity of ``target`` in ``a (x) b`` by Koike's quadruple LR sum.

    Valid when ``len(xi)+len(eta)+len(sigma)+len(tau) <= n``; the caller is
    responsible for that hypothesis.
    """
    xi, eta = as_label(a).pos, as_label(a).neg
    sigma, tau = as_label(b).pos, as_label(b).neg
    lam, mu = as_label(target).pos, as_label(target).neg
    total = 0
    first = _pair_table(xi, tau)  # (alpha, beta)
    second = _pair_table(eta, sigma)  # (gamma, delta)
    for (alpha, beta), x in first.items():
        for (gamma, delta), y in second.items():
            if alpha.weight() + delta.weight() != lam.weight():
                continue
            if beta.weight() + gamma.weight() != mu.weight():
                continue
            total += x * y * _lr(alpha, delta, lam) * _lr(beta, gamma, mu)
    return total


def rational_tensor(a: LabelLike, b: LabelLike, n: int) -> Decomposition:
    """Full decomposition of ``L^a (x) L^b`` at rank ``n`` (Koike's theorem)."""
    a, b = as_label(a), as_label(b)
    need = a.min_rank() + b.min_rank()
    if need > n:
        raise ValueError(f"tensor product theorem requires n >= {need}, got n={n}")
    first = _pair_table(a.pos, b.neg)
    second = _pair_table(a.neg, b.pos)
    out: Counter = Counter()
    for (alpha, beta), x in first.items():
        for (gamma, delta), y in second.items():
            for lam, c1 in _product(alpha, delta):
                for mu, c2 in _product(beta, gamma):
                    if len(lam) + len(mu) <= n:
                        out[RationalLabel(lam, mu)] += x * y * c1 * c2
    return Decomposition(out, n)


# ---------------------------------------------------------------------------
# Characters


def remove_horizontal_strip(lam: Sequence[int], k: int) -> list[Partition]:
    """Partitions ``mu`` with ``lam / mu`` a horizontal ``k``-strip."""
    lam = tuple(lam)
    out = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(lam):
            if left == 0:
                out.append(Partition(acc))
            return
        floor = lam[i + 1] if i + 1 < len(lam) else 0
        for part in range(lam[i], floor - 1, -1):
            taken = lam[i] - part
            if taken > left:
                break
            acc.append(part)
            rec(i + 1, left - taken, acc)
            acc.pop()

    rec(0, k, [])
    return out


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content."""
    return _kostka(Partition(shape), tuple(sorted((c for c in content if c), reverse=True)))


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 0 if shape else 1
    if len(shape) > len(content) or shape.weight() != sum(content):
        return 0
    last, rest = content[-1], content[:-1]
    return sum(_kostka(mu, rest) for mu in remove_horizontal_strip(shape, last))


def _orbit_size(weight: Weight) -> int:
    size = factorial(len(weight))
    for c in Counter(weight).values():
        size //= factorial(c)
    return size


def _distinct_permutations(weight: Weight) -> set[Weight]:
    return set(permutations(weight))


@lru_cache(maxsize=None)
def _dominant_character(label: RationalLabel, n: int) -> tuple[tuple[Weight, int], ...]:
    w = label.weight(n)
    shift = w[-1]
    shape = Partition(x - shift for x in w)
    out = []
    for nu in enumerate_partitions(shape.weight(), n):
        k = _kostka(shape, tuple(nu))
        if k:
            out.append((tuple(x + shift for x in nu.padded(n)), k))
    return tuple(out)


def dominant_character(label: LabelLike, n: int) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of ``L^label`` at rank ``n``."""
    return dict(_dominant_character(as_label(label), n))


def irreducible_character(label: LabelLike, n: int) -> Counter:
    """Full weight multiset of ``L^label`` at rank ``n``."""
    out: Counter = Counter()
    for w, k in _dominant_character(as_label(label), n):
        for perm in _distinct_permutations(w):
            out[perm] += k
    return out


def decomposition_character(decomp: Decomposition, n: int) -> Counter:
    out: Counter = Counter()
    for label, m in decomp.items():
        for w, k in irreducible_character(label, n).items():
            out[w] += m * k
    return out


def character_decompose(weights: Mapping[Sequence[int], int] | Iterable[Sequence[int]],
                        n: int) -> Decomposition:
    """Peel irreducible characters off a weight multiset.

    The lexicographically largest remaining weight is always the highest
    weight of some summand, so subtracting that irreducible character and
    repeating yields the unique decomposition.  Only dominant weights are
    tracked; the full multiset is checked for permutation symmetry first.
    """
    if isinstance(weights, Mapping):
        counts = Counter({tuple(w): m for w, m in weights.items()})
    else:
        counts = Counter(tuple(w) for w in weights)
    orbits: Counter = Counter()
    for w, m in counts.items():
        if len(w) != n:
            raise ValueError(f"weight {w} does not have {n} coordinates")
        if m < 0:
            raise NotACharacterError(f"negative weight multiplicity at {w}")
        top = tuple(sorted(w, reverse=True))
        if counts.get(top, 0) != m:
            raise NotACharacterError(f"weight multiset is not symmetric at {w}")
        if m:
            orbits[top] += 1
    for top, seen in orbits.items():
        if seen != _orbit_size(top):
            raise NotACharacterError(f"weight multiset is not symmetric at {top}")
    remaining = {w: m for w, m in counts.items() if m and is_dominant(w)}
    result: Counter = Counter()
    while remaining:
        top = max(remaining)
        mult = remaining[top]
        label = RationalLabel.from_weight(top)
        for w, k in _dominant_character(label, n):
            left = remaining.get(w, 0) - mult * k
            if left < 0:
                raise NotACharacterError(
                    f"subtracting {mult} x {label.pretty()} leaves weight {w} at {left}")
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
        result[label] += mult
    return Decomposition(result, n)
