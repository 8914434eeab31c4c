"""Derivations of the free Lie algebra, evaluated inside the tensor algebra.

A degree-``k`` derivation is fixed by the images of the generators, which are
degree-``k+1`` Lie elements.  It extends to all of T(H) as an associative
derivation, and on embedded Lie elements this agrees with the Lie
derivation, so brackets can be computed word by word.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping

from .words import BracketWord, TensorVector, bracket_degree, embed, left_normed, lyndon_basis


def dynkin(vec: TensorVector) -> TensorVector:
    """Dynkin map: each word ``x_{i1}...x_{im}`` goes to ``[x_{i1}, ..., x_{im}]``."""
    out = TensorVector()
    for word, c in vec.items():
        for w, s in embed(left_normed(word)).items():
            out.add_term(w, c * s)
    return out


def is_lie_element(vec: TensorVector) -> bool:
    """Dynkin-Specht-Wever test for a homogeneous element."""
    if not vec:
        return True
    m = vec.degree()
    return dynkin(vec) == m * vec


class Derivation:
    def __init__(self, n: int, degree: int, images: Mapping[int, TensorVector] | None = None):
        self.n = n
        self.degree = degree
        self.images: dict[int, TensorVector] = {}
        for i, v in (images or {}).items():
            if not 1 <= i <= n:
                raise ValueError(f"generator x{i} outside rank {n}")
            v = TensorVector(v)
            if v and v.degree() != degree + 1:
                raise ValueError(f"image of x{i} has degree {v.degree()}, expected {degree + 1}")
            if v:
                self.images[i] = v

    @classmethod
    def from_terms(cls, n: int, degree: int, terms: Iterable[tuple[int, BracketWord, int]]) -> "Derivation":
        """``sum c * x_i^* (x) b`` for bracket words ``b`` of degree ``degree+1``."""
        images: dict[int, TensorVector] = {}
        for i, b, c in terms:
            if bracket_degree(b) != degree + 1:
                raise ValueError("bracket word has the wrong degree")
            images[i] = images.get(i, TensorVector()) + c * embed(b)
        return cls(n, degree, images)

    def image(self, i: int) -> TensorVector:
        return self.images.get(i, TensorVector())

    def apply(self, vec: TensorVector) -> TensorVector:
        out = TensorVector()
        for word, c in vec.items():
            for pos, letter in enumerate(word):
                img = self.images.get(letter)
                if not img:
                    continue
                prefix, suffix = word[:pos], word[pos + 1:]
                for w, s in img.items():
                    out.add_term(prefix + w + suffix, c * s)
        return out

    def bracket(self, other: "Derivation") -> "Derivation":
        return derivation_bracket(self, other)

    def is_lie(self) -> bool:
        return all(is_lie_element(v) for v in self.images.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        if not self.images and not other.images:
            return self.n == other.n
        return (self.n, self.degree, self.images) == (other.n, other.degree, other.images)

    def __add__(self, other: "Derivation") -> "Derivation":
        self._check(other)
        keys = set(self.images) | set(other.images)
        return Derivation(self.n, self.degree, {i: self.image(i) + other.image(i) for i in keys})

    def __neg__(self) -> "Derivation":
        return Derivation(self.n, self.degree, {i: -v for i, v in self.images.items()})

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + (-other)

    def _check(self, other: "Derivation") -> None:
        if self.n != other.n:
            raise ValueError("derivations live on different ranks")
        if self.degree != other.degree and self.images and other.images:
            raise ValueError("cannot add derivations of different degrees")

    def is_zero(self) -> bool:
        return not self.images

    def __repr__(self) -> str:
        return f"Derivation(n={self.n}, degree={self.degree}, terms={sum(map(len, self.images.values()))})"


def derivation_bracket(f: Derivation, g: Derivation) -> Derivation:
    """``[f, g] = f g - g f``, of degree ``deg f + deg g``."""
    if f.n != g.n:
        raise ValueError("derivations live on different ranks")
    images = {}
    for i in range(1, f.n + 1):
        value = f.apply(g.image(i)) - g.apply(f.image(i))
        if value:
            images[i] = value
    return Derivation(f.n, f.degree + g.degree, images)


def random_derivation(n: int, degree: int, rng: random.Random, terms: int = 3) -> Derivation:
    basis = lyndon_basis(n, degree + 1)
    chosen = [(rng.randint(1, n), rng.choice(basis), rng.randint(-3, 3)) for _ in range(terms)]
    return Derivation.from_terms(n, degree, chosen)
