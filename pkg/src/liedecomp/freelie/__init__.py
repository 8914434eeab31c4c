"""Explicit free Lie algebra, its Chen and N quotients, and exact linear maps."""

from .chen import (
    chen_basis,
    chen_bracket,
    chen_der_abelianization_rank,
    quotient_basis_metabelian,
    straighten,
)
from .derivations import Derivation, derivation_bracket, is_lie_element
from .linalg import ExactMatrix, exact_rank, rank_of_vectors
from .maps import contraction_matrix, trace_matrices
from .nquot import quotient_basis_n
from .weights import formal_character, maximal_vector_check, v_alt, v_sym
from .words import BracketWord, TensorVector, embed, lyndon_basis, lyndon_words

__all__ = [
    "BracketWord",
    "Derivation",
    "ExactMatrix",
    "TensorVector",
    "chen_basis",
    "chen_bracket",
    "chen_der_abelianization_rank",
    "contraction_matrix",
    "derivation_bracket",
    "embed",
    "exact_rank",
    "formal_character",
    "is_lie_element",
    "lyndon_basis",
    "lyndon_words",
    "maximal_vector_check",
    "quotient_basis_metabelian",
    "quotient_basis_n",
    "rank_of_vectors",
    "straighten",
    "trace_matrices",
    "v_alt",
    "v_sym",
]
