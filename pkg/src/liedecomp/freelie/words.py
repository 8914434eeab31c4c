"""Lyndon words, bracket trees and the embedding of the free Lie algebra into T(H).

A bracket word is either a generator index ``i`` (meaning ``x_i``, 1-based) or
a pair ``(left, right)`` meaning ``[left, right]``.  Tensor vectors are sparse
maps from words (tuples of indices) to integers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

BracketWord = Union[int, tuple]
Word = tuple[int, ...]


class TensorVector(dict):
    """Finitely supported integer combination of words; zero entries are dropped."""

    def __init__(self, data=()):
        super().__init__()
        items = data.items() if isinstance(data, dict) else data
        for word, coeff in items:
            self.add_term(tuple(word), coeff)

    def add_term(self, word: Word, coeff) -> None:
        value = self.get(word, 0) + coeff
        if value:
            self[word] = value
        else:
            self.pop(word, None)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = TensorVector(self)
        for w, c in other.items():
            out.add_term(w, c)
        return out

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        out = TensorVector(self)
        for w, c in other.items():
            out.add_term(w, -c)
        return out

    def __neg__(self) -> "TensorVector":
        return TensorVector({w: -c for w, c in self.items()})

    def __mul__(self, scalar) -> "TensorVector":
        return TensorVector({w: scalar * c for w, c in self.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "TensorVector") -> "TensorVector":
        """Concatenation product in the tensor algebra."""
        out = TensorVector()
        for u, a in self.items():
            for v, b in other.items():
                out.add_term(u + v, a * b)
        return out

    def degree(self) -> int | None:
        degrees = {len(w) for w in self}
        if len(degrees) > 1:
            raise ValueError("tensor vector is not homogeneous")
        return degrees.pop() if degrees else None


def letter(i: int) -> TensorVector:
    return TensorVector({(i,): 1})


def commutator(a: TensorVector, b: TensorVector) -> TensorVector:
    return (a @ b) - (b @ a)


# ---------------------------------------------------------------------------
# Lyndon words


def is_lyndon(word: Sequence[int]) -> bool:
    w = tuple(word)
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_words(n: int, k: int) -> list[Word]:
    """Lyndon words of length ``k`` over ``1..n`` in lexicographic order (Duval)."""
    if n < 1 or k < 1:
        return []
    out = []
    w = [0]
    while w:
        if len(w) == k:
            out.append(tuple(x + 1 for x in w))
        m = len(w)
        while len(w) < k:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def standard_factorization(word: Sequence[int]) -> tuple[Word, Word]:
    """Split a Lyndon word as ``u v`` with ``v`` its longest proper Lyndon suffix."""
    w = tuple(word)
    if len(w) < 2:
        raise ValueError("a single letter has no standard factorization")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: the last letter is always Lyndon")


@lru_cache(maxsize=None)
def lyndon_bracket(word: Word) -> BracketWord:
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (lyndon_bracket(u), lyndon_bracket(v))


def lyndon_basis(n: int, k: int) -> list[BracketWord]:
    """Standard bracketings of the Lyndon words: a basis of ``L_n(k)``."""
    return [lyndon_bracket(w) for w in lyndon_words(n, k)]


def left_normed(indices: Sequence[int]) -> BracketWord:
    """``[x_{i1}, x_{i2}, ..., x_{ik}] = [[...[x_{i1}, x_{i2}], ...], x_{ik}]``."""
    it = iter(indices)
    tree: BracketWord = next(it)
    for i in it:
        tree = (tree, i)
    return tree


def bracket_degree(b: BracketWord) -> int:
    if isinstance(b, int):
        return 1
    return bracket_degree(b[0]) + bracket_degree(b[1])


def foliage(b: BracketWord) -> Word:
    if isinstance(b, int):
        return (b,)
    return foliage(b[0]) + foliage(b[1])


def bracket_str(b: BracketWord) -> str:
    if isinstance(b, int):
        return f"x{b}"
    return f"[{bracket_str(b[0])},{bracket_str(b[1])}]"


@lru_cache(maxsize=None)
def _embed(b: BracketWord) -> tuple[tuple[Word, int], ...]:
    if isinstance(b, int):
        return (((b,), 1),)
    left = TensorVector(_embed(b[0]))
    right = TensorVector(_embed(b[1]))
    return tuple(sorted(commutator(left, right).items()))


def embed(b: BracketWord) -> TensorVector:
    """Image in the tensor algebra under ``[X, Y] -> XY - YX``."""
    return TensorVector(_embed(b))


def embed_left_normed(indices: Sequence[int]) -> TensorVector:
    return embed(left_normed(tuple(indices)))


def word_weight(word: Iterable[int], n: int) -> tuple[int, ...]:
    w = [0] * n
    for i in word:
        w[i - 1] += 1
    return tuple(w)


def iter_words(n: int, k: int) -> Iterator[Word]:
    return product(range(1, n + 1), repeat=k)
