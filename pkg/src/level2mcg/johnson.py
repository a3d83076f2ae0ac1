"""The mod-2 Johnson homomorphism tau_1 on the level-2 subgroup, and its rank checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .catalog import McgExpr, Push, TSquarePair, TSquareQuad, YSlide, inverse_endo, theorem_generators
from .freegroup import SubstEndo, Word, concat, invert
from .gf2 import Echelon, NotInSum, Subspace, SumSolver, kernel, subspace_ops
from .homology import homology_action, is_level2
from .magnus import in_omega_span, theta2
from .tensor import (
    HClass,
    Tensor,
    c_map,
    c_classes,
    cube,
    even_basis,
    even_sym3_dim_formula,
    f_map,
    invariant_bases,
    s2,
    sym2_dim_formula,
    sym3_dim_formula,
)


class NotLevel2(ValueError):
    def __init__(self, e: SubstEndo):
        self.matrix = homology_action(e)
        rows = "\n".join("".join(str(b) for b in r) for r in self.matrix.to_lists())
        super().__init__(f"endomorphism acts nontrivially on H_1(N_g; Z/2):\n{rows}")


class NotLiftable(ValueError):
    pass


@dataclass(frozen=True)
class Tau1Hom:
    """Values on gamma_1..gamma_g, each a representative modulo <omega>."""

    g: int
    values: tuple[Tensor, ...]

    def equivalent(self, other: Tau1Hom) -> bool:
        return self.g == other.g and all(
            in_omega_span(a + b) for a, b in zip(self.values, other.values)
        )


@dataclass(frozen=True)
class Tau1Tensor:
    """Value in (H^{(x)3})^{S_3}. ``derived`` marks use of the quadruple-twist closed form."""

    g: int
    value: Tensor
    derived: bool = False


def _require_level2(e: SubstEndo) -> None:
    if not is_level2(e):
        raise NotLevel2(e)


def tau1_hom(e: SubstEndo) -> Tau1Hom:
    """Crossed-homomorphism values from the stored inverse action ``e`` of phi.

    On the level-2 subgroup phi_* is the identity, so the value on gamma_k is
    theta_2(gamma_k) - theta_2(phi^{-1}(gamma_k)), and theta_2(gamma_k) = 0.
    """
    _require_level2(e)
    g = e.g
    return Tau1Hom(g, tuple(theta2(Word.gen(g, k)).deg2 + theta2(w).deg2 for k, w in enumerate(e.images, 1)))


def tau1_appendix(e: SubstEndo) -> Tau1Hom:
    """Values [e(gamma_k) gamma_k^{-1}] read in (H^{(x)2})^{S_2}/<omega> via theta_2."""
    _require_level2(e)
    g = e.g
    return Tau1Hom(
        g,
        tuple(theta2(concat(w, invert(Word.gen(g, k)))).deg2 for k, w in enumerate(e.images, 1)),
    )


def assemble(h: Tau1Hom) -> Tensor:
    """sum_k C_k (x) h(gamma_k); the C-basis is self-dual for the intersection form."""
    gg = h.g * h.g
    bits = 0
    for k, v in enumerate(h.values):
        bits ^= v.bits << (k * gg)
    return Tensor(h.g, 3, bits)


@lru_cache(maxsize=None)
def _lift_solver(g: int) -> SumSolver:
    b = invariant_bases(g)
    return SumSolver(b.sym3, b.h_omega)


def sym_lift(t: Tensor) -> Tensor:
    """The unique S_3-invariant tensor congruent to ``t`` modulo H (x) <omega>."""
    try:
        u, _ = _lift_solver(t.g).solve(t.bits)
    except NotInSum:
        raise NotLiftable("tensor is not congruent to an S_3-invariant one") from None
    return Tensor(t.g, 3, u)


def quad_closed_form(g: int, idx: Sequence[int]) -> Tensor:
    """(C_i + C_j + C_k + C_l)^{(x)3}, the value assumed for the formal quadruple twist."""
    return cube(HClass.of(g, *idx))


def tau1(x: McgExpr) -> Tau1Tensor:
    """tau_1 of a product of catalog generators.

    Non-formal factors are evaluated together through their pi_1 action.
    Each formal quadruple twist adds its closed form; this is legitimate since
    tau_1 is a homomorphism into an elementary abelian 2-group.
    """
    g = x.g
    plain = McgExpr(g, tuple(f for f in x.factors if not isinstance(f[0], TSquareQuad)))
    value = sym_lift(assemble(tau1_hom(inverse_endo(plain))))
    derived = False
    for gen, _ in x.factors:
        if isinstance(gen, TSquareQuad):
            value = value + quad_closed_form(g, gen.indices)
            derived = True
    return Tau1Tensor(g, value, derived)


# -- closed forms ---------------------------------------------------------------


def slide_closed_form(g: int, i: int, j: int) -> Tensor:
    return s2(HClass.basis(g, i), HClass.of(g, i, j))


def pair_closed_form(g: int, i: int, j: int) -> Tensor:
    return cube(HClass.of(g, i, j))


def push_closed_form(g: int, i: int) -> Tensor:
    ci = HClass.basis(g, i)
    out = Tensor(g, 3)
    for cj in c_classes(g):
        out = out + s2(cj, ci)
    return out


def tau1_slide(g: int, i: int, j: int) -> Tensor:
    return tau1(McgExpr.of(g, YSlide(i, j))).value


def tau1_pair(g: int, i: int, j: int) -> Tensor:
    return tau1(McgExpr.of(g, TSquarePair(i, j))).value


def tau1_push(g: int, i: int) -> Tensor:
    return tau1(McgExpr.of(g, Push(Word.gen(g, i)))).value


# -- rank computations ------------------------------------------------------------


def lemma35(g: int) -> dict:
    """(H (x) <omega>) meets (H^{(x)3})^{S_3} trivially, checked two ways."""
    b = invariant_bases(g)
    meet = subspace_ops(b.h_omega, b.sym3).intersection
    f_kills_sym3 = all(f_map(Tensor(g, 3, r)).bits == 0 for r in b.sym3.basis)
    f_images = [f_map(Tensor(g, 3, r)).bits for r in b.h_omega.basis]
    f_injective = Subspace.span(f_images, g * g).dim == b.h_omega.dim
    return {
        "intersection_dim": meet.dim,
        "f_kills_sym3": f_kills_sym3,
        "f_injective_on_h_omega": f_injective,
        "ok": meet.dim == 0 and f_kills_sym3 and f_injective,
    }


def lemma42(g: int) -> dict:
    """c maps sym3 onto sym2 with kernel exactly even_sym3."""
    if g < 3:
        raise ValueError("the exact sequence needs genus >= 3")
    b = invariant_bases(g)
    pairs = [(r, c_map(Tensor(g, 3, r)).bits) for r in b.sym3.basis]
    image = Subspace.span((img for _, img in pairs), g * g)
    ker = kernel(pairs, g**3, g * g)
    dims = (b.sym3.dim, b.sym2.dim, b.even_sym3.dim)
    expected = (sym3_dim_formula(g), sym2_dim_formula(g), even_sym3_dim_formula(g))
    return {
        "surjective": image == b.sym2,
        "kernel_eq": ker == b.even_sym3,
        "dims": dims,
        "expected_dims": expected,
        "ok": image == b.sym2 and ker == b.even_sym3 and dims == expected,
    }


def even_cube_spanning(g: int, exhaustive: bool = False) -> list[Tensor]:
    """Cubes X^{(x)3} spanning the same space as all X in H_even - {0}.

    The cube of a sum expands into cubes, S(a,b) and S(a,b,c) terms of at most
    three summands, so sums of at most three basis vectors X_i already span.
    ``exhaustive`` enumerates all 2^(g-1) - 1 nonzero X instead.
    """
    xs = even_basis(g)
    if exhaustive:
        out = []
        for mask in range(1, 1 << len(xs)):
            x = HClass(g, 0)
            for a, xa in enumerate(xs):
                if (mask >> a) & 1:
                    x = x + xa
            out.append(cube(x))
        return out
    out = []
    for size in (1, 2, 3):
        for combo in combinations(xs, size):
            x = HClass(g, 0)
            for xa in combo:
                x = x + xa
            out.append(cube(x))
    return out


def lemma43_vectors(g: int, exhaustive: bool = False) -> list[Tensor]:
    out = [tau1_slide(g, i, j) for i in range(1, g + 1) for j in range(1, g + 1) if i != j]
    out += even_cube_spanning(g, exhaustive)
    out += [tau1_push(g, i) for i in range(1, g + 1)]
    return out


def _rank(tensors: Sequence[Tensor], n: int) -> int:
    e = Echelon(n)
    e.extend(t.bits for t in tensors)
    return len(e)


def lemma43_rank(g: int, exhaustive: bool = False) -> int:
    return _rank(lemma43_vectors(g, exhaustive), g**3)


def lemma43_bound(g: int) -> int:
    return comb(g, 3) + comb(g, 2) + g


def abelianization_dim(g: int) -> int:
    return comb(g, 3) + comb(g, 2)


def iota_rank(g: int) -> int:
    return _rank([tau1_push(g, i) for i in range(1, g + 1)], g**3)


@dataclass(frozen=True)
class Minimality:
    g: int
    count: int
    quotient_dim: int
    independent: bool
    derived: bool = True


def minimality(g: int) -> Minimality:
    """Independence of tau_1 of the reduced generators modulo the push image."""
    gens = theorem_generators(g, "thm_1_2")
    e = Echelon(g**3)
    e.extend(tau1_push(g, i).bits for i in range(1, g + 1))
    base = len(e)
    independent = True
    derived = False
    for x in gens:
        t = tau1(x)
        derived |= t.derived
        if not e.add(t.value.bits):
            independent = False
    quotient = len(e) - base
    return Minimality(g, len(gens), quotient, independent and quotient == len(gens), derived)


@dataclass(frozen=True)
class RankSuite:
    g: int
    lemma35_ok: bool
    lemma42: dict | None
    lemma43_rank: int
    iota_rank: int
    minimality: Minimality
    expected: dict = field(default_factory=dict)


def rank_suite(g: int) -> RankSuite:
    if g < 4:
        raise ValueError(f"rank suite needs genus >= 4, got {g}")
    return RankSuite(
        g=g,
        lemma35_ok=lemma35(g)["ok"],
        lemma42=lemma42(g),
        lemma43_rank=lemma43_rank(g),
        iota_rank=iota_rank(g),
        minimality=minimality(g),
        expected={
            "lemma43_rank": lemma43_bound(g),
            "iota_rank": g,
            "quotient_dim": abelianization_dim(g),
        },
    )
