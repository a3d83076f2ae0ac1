"""H_1(N_g; Z/2) with its intersection form, w1 and the induced action of endomorphisms.

The loops gamma_i are one-sided and pairwise disjoint away from the base
point, so the C-basis is orthonormal: the form's Gram matrix is the identity.
"""

from __future__ import annotations

from .freegroup import SubstEndo, Word
from .gf2 import GF2Matrix, Subspace, kernel
from .tensor import GenusMismatch, HClass, w1_bits


def homology_class(w: Word) -> HClass:
    """Mod-2 abelianization: coordinate i is the parity of the number of +-i letters."""
    bits = 0
    for a in w.letters:
        bits ^= 1 << (abs(a) - 1)
    return HClass(w.g, bits)


def intersection_form(x: HClass, y: HClass) -> int:
    if x.g != y.g:
        raise GenusMismatch(f"genus {x.g} != {y.g}")
    return bin(x.bits & y.bits).count("1") & 1


def w1(x: HClass) -> int:
    return w1_bits(x.bits)


def form_matrix(g: int) -> GF2Matrix:
    return GF2Matrix.identity(g)


def h_even(g: int) -> Subspace:
    """Ker w1, computed as the kernel of the all-ones functional."""
    return kernel(((1 << i, w1_bits(1 << i)) for i in range(g)), g, 1)


def homology_action(e: SubstEndo) -> GF2Matrix:
    """g x g matrix whose column i is the class of e(gamma_i).

    Stored row-wise: row r has bit i set iff C_{r+1} appears in the class of
    e(gamma_{i+1}).
    """
    g = e.g
    rows = [0] * g
    for i, w in enumerate(e.images):
        col = homology_class(w).bits
        for r in range(g):
            if (col >> r) & 1:
                rows[r] |= 1 << i
    return GF2Matrix(g, tuple(rows))


def is_level2(e: SubstEndo) -> bool:
    return homology_action(e) == GF2Matrix.identity(e.g)


def preserves_form(e: SubstEndo) -> bool:
    m = homology_action(e)
    q = form_matrix(e.g)
    return m.transpose() @ q @ m == q
