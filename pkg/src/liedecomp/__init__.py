"""Exact GL(n,Q)-decompositions of derivation algebras of free, Chen and N-quotient Lie algebras."""

from .decomp import (
    chen_der_decomposition,
    chen_johnson_image,
    cokernel_decomposition,
    der_decomposition,
    free_lie_decomposition,
    johnson_image_decomposition,
    n_der_decomposition,
    n_johnson_image,
)
from .partitions import Partition
from .symfunc import Decomposition, RationalLabel

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "Partition",
    "RationalLabel",
    "chen_der_decomposition",
    "chen_johnson_image",
    "cokernel_decomposition",
    "der_decomposition",
    "free_lie_decomposition",
    "johnson_image_decomposition",
    "n_der_decomposition",
    "n_johnson_image",
]
