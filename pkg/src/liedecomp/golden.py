"""Reference tables for the cokernel and image of the rational Johnson map, n >= k+2.

Rows are kept verbatim from the reference tables, in table notation:
``(lam)`` is a polynomial irreducible and, in the second column of the
image table, ``(mu)`` stands for ``{mu;(1)}``.  Known
disagreements with the computed values are listed in ``KNOWN_ERRATA`` so
``table --check`` can name them; they are not patched here.
"""

from __future__ import annotations

from .symfunc import Decomposition

COKER_ROWS: dict[int, str] = {
    1: "0",
    2: "(2)",
    3: "(3) ⊕ (1^3)",
    4: "(4) ⊕ (2,2) ⊕ (2,1^2)",
    5: "(5) ⊕ (3,2) ⊕ 2(3,1^2) ⊕ (2^2,1) ⊕ (1^5)",
    # printed with (3,1^3) once; see KNOWN_ERRATA
    6: "(6) ⊕ 2(4,2) ⊕ 2(4,1^2) ⊕ (3^2) ⊕ 2(3,2,1) ⊕ (3,1^3) ⊕ 2(2^3) ⊕ (2^2,1^2) ⊕ (2,1^4)",
    7: "(7) ⊕ 2(5,2) ⊕ 3(5,1^2) ⊕ 2(4,3) ⊕ 5(4,2,1) ⊕ 2(4,1^3) ⊕ 3(3^2,1)"
       " ⊕ 3(3,2^2) ⊕ 5(3,2,1^2) ⊕ 3(3,1^4) ⊕ 2(2^3,1) ⊕ 2(2^2,1^3) ⊕ (1^7)",
}

IMAGE_ROWS: dict[int, tuple[str, str]] = {
    1: ("(1)", "(1,1)"),
    2: ("(1^2)", "(2,1)"),
    3: ("2(2,1)", "(3,1) ⊕ (2,1^2)"),
    4: ("3(3,1) ⊕ (2^2) ⊕ 2(2,1^2) ⊕ (1^4)",
        "(4,1) ⊕ (3,2) ⊕ (3,1^2) ⊕ (2^2,1) ⊕ (2,1^3)"),
    5: ("4(4,1) ⊕ 4(3,2) ⊕ 4(3,1^2) ⊕ 4(2^2,1) ⊕ 4(2,1^3)",
        "(5,1) ⊕ (4,2) ⊕ 2(4,1^2) ⊕ (3^2) ⊕ 3(3,2,1) ⊕ (3,1^3) ⊕ 2(2^2,1^2) ⊕ (2,1^4)"),
    # printed with 9(3,1^3); see KNOWN_ERRATA
    6: ("5(5,1) ⊕ 7(4,2) ⊕ 8(4,1^2) ⊕ 4(3^2) ⊕ 14(3,2,1) ⊕ 9(3,1^3) ⊕ 3(2^3)"
        " ⊕ 8(2^2,1^2) ⊕ 4(2,1^4) ⊕ (1^6)",
        "(6,1) ⊕ 2(5,2) ⊕ 2(5,1^2) ⊕ 2(4,3) ⊕ 5(4,2,1) ⊕ 3(4,1^3) ⊕ 3(3^2,1)"
        " ⊕ 3(3,2^2) ⊕ 5(3,2,1^2) ⊕ 2(3,1^4) ⊕ 2(2^3,1) ⊕ 2(2^2,1^3) ⊕ (2,1^5)"),
    # printed with 18(3,2^3), which has the wrong size, and without (3^2,1^2)
    # in the second column; see KNOWN_ERRATA
    7: ("6(6,1) ⊕ 12(5,2) ⊕ 12(5,1^2) ⊕ 12(4,3) ⊕ 30(4,2,1) ⊕ 18(4,1^3) ⊕ 18(3^2,1)"
        " ⊕ 18(3,2^3) ⊕ 30(3,2,1^2) ⊕ 12(3,1^4) ⊕ 12(2^3,1) ⊕ 12(2^2,1^3) ⊕ 6(2,1^5)",
        "(7,1) ⊕ 2(6,2) ⊕ 3(6,1^2) ⊕ 4(5,3) ⊕ 8(5,2,1) ⊕ 4(5,1^3) ⊕ (4^2) ⊕ 9(4,3,1)"
        " ⊕ 6(4,2^2) ⊕ 12(4,2,1^2) ⊕ 4(4,1^4) ⊕ 6(3^2,2) ⊕ 9(3,2^2,1) ⊕ 8(3,2,1^3)"
        " ⊕ 3(3,1^5) ⊕ (2^4) ⊕ 4(2^3,1^2) ⊕ 2(2^2,1^4) ⊕ (2,1^6)"),
}

GOLDEN_KMAX = 7

KNOWN_ERRATA: dict[tuple[str, int], str] = {
    ("coker", 6): "(3,1^3) has multiplicity 2: two standard tableaux of that shape have "
                  "major index divisible by 6, and only 2 matches the necklace dimension",
    ("image", 6): "(3,1^3) has multiplicity 8 = 10 - 2, the complement of the cokernel entry",
    ("image", 7): "the polynomial entry (3,2^3) should read (3,2^2), and the second column "
                  "omits 6(3^2,1^2)",
}


def golden_coker(k: int) -> Decomposition:
    return Decomposition.parse(COKER_ROWS[k])


def golden_image(k: int) -> tuple[Decomposition, Decomposition]:
    poly, nonpoly = IMAGE_ROWS[k]
    return Decomposition.parse(poly), Decomposition.parse(nonpoly, neg=(1,))
