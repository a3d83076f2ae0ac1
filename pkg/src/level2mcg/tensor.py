"""Tensor powers of H = H_1(N_g; Z/2) in degrees 1..3.

Coordinates are lexicographic in the C-basis: the basis tensor
C_i (x) C_j (x) C_k (1-based) sits at flat index (i-1)g^2 + (j-1)g + (k-1),
and likewise (i-1)g + (j-1) in degree 2. Every module goes through
:func:`flat_index` / :func:`multi_index` for this.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

from .gf2 import DimensionMismatch, GF2Vec, Subspace, bits_of


class GenusMismatch(ValueError):
    pass


def flat_index(g: int, idx: Sequence[int]) -> int:
    """0-based flat coordinate of ``C_{idx[0]} (x) ... `` with 1-based indices."""
    k = 0
    for i in idx:
        if not 1 <= i <= g:
            raise IndexError(f"index {i} out of range 1..{g}")
        k = k * g + (i - 1)
    return k


def multi_index(g: int, degree: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(degree):
        k, r = divmod(k, g)
        out.append(r + 1)
    return tuple(reversed(out))


@dataclass(frozen=True)
class HClass:
    """A class in H, as a g-bit mask over C_1..C_g (bit i-1 is C_i)."""

    g: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.g < 1:
            raise ValueError("genus must be positive")
        if self.bits < 0 or self.bits >> self.g:
            raise ValueError(f"class does not fit in genus {self.g}")

    @classmethod
    def basis(cls, g: int, i: int) -> HClass:
        if not 1 <= i <= g:
            raise IndexError(f"C_{i} out of range for genus {g}")
        return cls(g, 1 << (i - 1))

    @classmethod
    def of(cls, g: int, *indices: int) -> HClass:
        """Sum of the basis classes with the given 1-based indices."""
        bits = 0
        for i in indices:
            bits ^= cls.basis(g, i).bits
        return cls(g, bits)

    @property
    def coords(self) -> GF2Vec:
        return GF2Vec(self.g, self.bits)

    def support(self) -> list[int]:
        return [k + 1 for k in bits_of(self.bits)]

    def __add__(self, other: HClass) -> HClass:
        if self.g != other.g:
            raise GenusMismatch(f"genus {self.g} != {other.g}")
        return HClass(self.g, self.bits ^ other.bits)

    __sub__ = __add__

    def __bool__(self) -> bool:
        return self.bits != 0


@dataclass(frozen=True)
class Tensor:
    """An element of H^{(x)degree}; ``bits`` packs the coordinate vector."""

    g: int
    degree: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.degree not in (1, 2, 3):
            raise ValueError(f"unsupported degree {self.degree}")
        if self.bits < 0 or self.bits >> (self.g**self.degree):
            raise ValueError("coordinates do not fit the tensor space")

    @property
    def dim(self) -> int:
        return self.g**self.degree

    @property
    def coords(self) -> GF2Vec:
        return GF2Vec(self.dim, self.bits)

    @classmethod
    def basis(cls, g: int, *idx: int) -> Tensor:
        return cls(g, len(idx), 1 << flat_index(g, idx))

    @classmethod
    def from_monomials(cls, g: int, monomials: Iterable[Sequence[int]], degree: int) -> Tensor:
        bits = 0
        for m in monomials:
            if len(m) != degree:
                raise ValueError(f"monomial {m} has wrong degree")
            bits ^= 1 << flat_index(g, m)
        return cls(g, degree, bits)

    def monomials(self) -> list[tuple[int, ...]]:
        """Support as 1-based index tuples, lexicographically sorted."""
        return [multi_index(self.g, self.degree, k) for k in bits_of(self.bits)]

    def __add__(self, other: Tensor) -> Tensor:
        if self.g != other.g:
            raise GenusMismatch(f"genus {self.g} != {other.g}")
        if self.degree != other.degree:
            raise DimensionMismatch(f"degree {self.degree} != {other.degree}")
        return Tensor(self.g, self.degree, self.bits ^ other.bits)

    __sub__ = __add__

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        return " + ".join(".".join(f"C{i}" for i in m) for m in self.monomials())


def _same_genus(*xs: HClass) -> int:
    g = xs[0].g
    for x in xs[1:]:
        if x.g != g:
            raise GenusMismatch(f"genus {g} != {x.g}")
    return g


def _tp2(g: int, x: int, y: int) -> int:
    """Packed bits of x (x) y for g-bit masks."""
    out = 0
    for i in bits_of(x):
        out ^= y << (i * g)
    return out


def _tp3(g: int, x: int, y: int, z: int) -> int:
    yz = _tp2(g, y, z)
    out = 0
    gg = g * g
    for i in bits_of(x):
        out ^= yz << (i * gg)
    return out


def tensor(*xs: HClass) -> Tensor:
    """X_1 (x) ... (x) X_n for n in 1..3."""
    g = _same_genus(*xs)
    if len(xs) == 1:
        return Tensor(g, 1, xs[0].bits)
    if len(xs) == 2:
        return Tensor(g, 2, _tp2(g, xs[0].bits, xs[1].bits))
    if len(xs) == 3:
        return Tensor(g, 3, _tp3(g, xs[0].bits, xs[1].bits, xs[2].bits))
    raise ValueError("degree above 3 is not supported")


def omega(g: int) -> Tensor:
    """Sum of C_i (x) C_i."""
    if g < 1:
        raise ValueError("genus must be positive")
    bits = 0
    for i in range(g):
        bits |= 1 << (i * g + i)
    return Tensor(g, 2, bits)


def s2(x: HClass, y: HClass) -> Tensor:
    """S(X, Y) = X.X.Y + X.Y.X + Y.X.X."""
    g = _same_genus(x, y)
    a, b = x.bits, y.bits
    return Tensor(g, 3, _tp3(g, a, a, b) ^ _tp3(g, a, b, a) ^ _tp3(g, b, a, a))


def s3(x: HClass, y: HClass, z: HClass) -> Tensor:
    """Sum over the six orderings of X (x) Y (x) Z."""
    g = _same_genus(x, y, z)
    bits = 0
    for a, b, c in permutations((x.bits, y.bits, z.bits)):
        bits ^= _tp3(g, a, b, c)
    return Tensor(g, 3, bits)


def cube(x: HClass) -> Tensor:
    return Tensor(x.g, 3, _tp3(x.g, x.bits, x.bits, x.bits))


def w1_bits(x: int) -> int:
    # each C_i is one-sided, so w1 is the parity functional
    return bin(x).count("1") & 1


def _check_degree(t: Tensor, d: int) -> None:
    if t.degree != d:
        raise DimensionMismatch(f"expected degree {d}, got {t.degree}")


def c_map(t: Tensor) -> Tensor:
    """Linear extension of X (x) Y (x) Z -> w1(X) Y (x) Z."""
    _check_degree(t, 3)
    gg = t.g * t.g
    mask = (1 << gg) - 1
    out = 0
    v = t.bits
    while v:
        # w1(C_i) = 1, so every first-factor block contributes its Y (x) Z part
        out ^= v & mask
        v >>= gg
    return Tensor(t.g, 2, out)


def f_map(t: Tensor) -> Tensor:
    """Linear extension of X (x) Y (x) Z -> w1(X) Y (x) Z + w1(Y) Z (x) X."""
    _check_degree(t, 3)
    g = t.g
    out = c_map(t).bits
    for k in bits_of(t.bits):
        i, _, l = multi_index(g, 3, k)
        out ^= 1 << ((l - 1) * g + (i - 1))
    return Tensor(g, 2, out)


def permute_factors(t: Tensor, perm: Sequence[int]) -> Tensor:
    """Move factor ``p`` to slot ``perm[p]`` (0-based) of every basis tensor."""
    if sorted(perm) != list(range(t.degree)):
        raise ValueError(f"{perm} is not a permutation of the tensor slots")
    out = 0
    for k in bits_of(t.bits):
        idx = multi_index(t.g, t.degree, k)
        new = [0] * t.degree
        for p, slot in enumerate(perm):
            new[slot] = idx[p]
        out ^= 1 << flat_index(t.g, new)
    return Tensor(t.g, t.degree, out)


def is_symmetric(t: Tensor) -> bool:
    return all(permute_factors(t, p) == t for p in permutations(range(t.degree)))


def c_classes(g: int) -> list[HClass]:
    return [HClass.basis(g, i) for i in range(1, g + 1)]


def even_basis(g: int) -> list[HClass]:
    """X_i = C_i + C_{i+1}, i = 1..g-1, a basis of Ker w1."""
    return [HClass.of(g, i, i + 1) for i in range(1, g)]


def sym3_spanning(xs: Sequence[HClass]) -> list[Tensor]:
    """{X_i^3} u {S(X_i, X_j) : i != j} u {S(X_i, X_j, X_k) : i < j < k}."""
    out = [cube(x) for x in xs]
    out += [s2(x, y) for a, x in enumerate(xs) for b, y in enumerate(xs) if a != b]
    out += [s3(x, y, z) for x, y, z in combinations(xs, 3)]
    return out


def sym2_spanning(g: int) -> list[Tensor]:
    cs = c_classes(g)
    out = [tensor(x, x) for x in cs]
    out += [tensor(x, y) + tensor(y, x) for x, y in combinations(cs, 2)]
    return out


def h_omega_spanning(g: int) -> list[Tensor]:
    """C_k (x) omega for k = 1..g."""
    w = omega(g).bits
    gg = g * g
    return [Tensor(g, 3, w << (k * gg)) for k in range(g)]


def sym3_dim_formula(g: int) -> int:
    return comb(g, 3) + 2 * comb(g, 2) + g


def sym2_dim_formula(g: int) -> int:
    return comb(g, 2) + g


def even_sym3_dim_formula(g: int) -> int:
    return comb(g - 1, 3) + 2 * comb(g - 1, 2) + (g - 1)


@dataclass(frozen=True)
class InvariantBases:
    g: int
    sym2: Subspace
    sym3: Subspace
    even_sym3: Subspace
    h_omega: Subspace


@lru_cache(maxsize=None)
def invariant_bases(g: int) -> InvariantBases:
    """Invariant subspaces spanned by their standard spanning sets (cached per genus)."""
    if g < 2:
        raise ValueError("invariant bases need genus >= 2")
    n3 = g**3
    return InvariantBases(
        g=g,
        sym2=Subspace.span((t.bits for t in sym2_spanning(g)), g * g),
        sym3=Subspace.span((t.bits for t in sym3_spanning(c_classes(g))), n3),
        even_sym3=Subspace.span((t.bits for t in sym3_spanning(even_basis(g))), n3),
        h_omega=Subspace.span((t.bits for t in h_omega_spanning(g)), n3),
    )
