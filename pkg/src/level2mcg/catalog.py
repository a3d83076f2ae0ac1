"""Mapping classes used by the generating sets: crosscap slides, pushes, squared twists.

A mapping class is carried by its action on pi_1 of the surface with a disk
removed. Products follow the convention ``phi psi = [g o f]`` for
``phi = [f]``, ``psi = [g]``: the left factor acts first. Consequently the
inverse action of ``x_1 x_2 ... x_n`` is ``inv(x_1) o inv(x_2) o ... o inv(x_n)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Union

from .freegroup import (
    SubstEndo,
    Word,
    WordSyntaxError,
    compose,
    compose_all,
    format_word,
    invert,
    parse_word,
)


class FormalOnly(ValueError):
    """The expression contains a twist with no pi_1 action attached."""


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class YSlide:
    i: int
    j: int

    def __str__(self) -> str:
        return f"Y({self.i},{self.j})"


@dataclass(frozen=True)
class Push:
    word: Word

    def __str__(self) -> str:
        return f"push({format_word(self.word)})"


@dataclass(frozen=True)
class TSquarePair:
    i: int
    j: int

    def __str__(self) -> str:
        return f"T2({self.i},{self.j})"


@dataclass(frozen=True)
class TSquareQuad:
    """Squared twist about alpha_{i,j,k,l}; formal (no pi_1 action)."""

    i: int
    j: int
    k: int
    l: int

    @property
    def indices(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    def __str__(self) -> str:
        return "T2({},{},{},{})".format(*self.indices)


McgGen = Union[YSlide, Push, TSquarePair, TSquareQuad]


def _check_index(g: int, *idx: int) -> None:
    for a in idx:
        if not 1 <= a <= g:
            raise IndexOutOfRange(f"index {a} out of range 1..{g}")


def validate(gen: McgGen, g: int) -> None:
    if isinstance(gen, (YSlide, TSquarePair)):
        _check_index(g, gen.i, gen.j)
        if gen.i == gen.j:
            raise IndexOutOfRange(f"{gen} needs distinct indices")
    elif isinstance(gen, TSquareQuad):
        _check_index(g, *gen.indices)
        if not gen.i < gen.j < gen.k < gen.l:
            raise IndexOutOfRange(f"{gen} needs strictly increasing indices")
    elif isinstance(gen, Push):
        if gen.word.g != g:
            raise IndexOutOfRange(f"{gen} is a word of genus {gen.word.g}, expected {g}")
    else:
        raise TypeError(f"not a catalog generator: {gen!r}")


# -- pi_1 actions of the crosscap slides --------------------------------------


def _w(g: int, *letters: int) -> Word:
    return Word(g, letters)


def _squares(g: int, indices) -> Word:
    """gamma_a^2 gamma_b^2 ... over ``indices`` in the given order."""
    return Word(g, tuple(a for a in indices for _ in range(2)))


@lru_cache(maxsize=None)
def slide_inverse_endo(g: int, i: int, j: int) -> SubstEndo:
    """The action of Y_{i;j}^{-1}, transcribed from its defining formulas."""
    _check_index(g, i, j)
    if i == j:
        raise IndexOutOfRange("Y(i,j) needs i != j")
    gi, gj = _w(g, i), _w(g, j)
    if i < j:
        inner = _squares(g, range(i + 1, j))
        a = inner * gj * invert(inner)
        img_i = invert(a) * invert(gi) * a
        tail = _squares(g, range(i + 1, j + 1))
        img_j = gj * invert(tail) * (gi**2) * tail
    else:
        up = _squares(g, range(j + 1, i + 1))
        a = invert(up) * gj * up
        img_i = invert(a) * invert(gi) * a
        mid = _squares(g, range(j + 1, i))
        img_j = gj * mid * (gi**2) * invert(mid)
    return SubstEndo.from_map(g, {i: img_i, j: img_j})


@lru_cache(maxsize=None)
def slide_forward_endo(g: int, i: int, j: int) -> SubstEndo:
    """The action of Y_{i;j}: the two-sided inverse of :func:`slide_inverse_endo`.

    For i < j, put P = gamma_{i+1}^2..gamma_{j-1}^2, E = P gamma_j P^-1 and
    a = gamma_i. The inverse action is a -> E^-1 a^-1 E, E -> E^-1 a^2 E^2 and
    fixes P, so its inverse sends E -> a^2 E and a -> a^2 E a^-1 E^-1 a^-2.
    For i > j, with Q = gamma_{j+1}^2..gamma_{i-1}^2, c = Q gamma_i Q^-1 and
    b = gamma_j, the inverse action is b -> b c^2, c -> c^-2 b^-1 c^-1 b c^2,
    whose inverse is b -> b^2 c^2 b^-1, c -> b c^-1 b^-1.
    """
    _check_index(g, i, j)
    if i == j:
        raise IndexOutOfRange("Y(i,j) needs i != j")
    gi, gj = _w(g, i), _w(g, j)
    if i < j:
        p = _squares(g, range(i + 1, j))
        e = p * gj * invert(p)
        img_i = (gi**2) * e * invert(gi) * invert(e) * (gi**-2)
        img_j = invert(p) * (gi**2) * p * gj
    else:
        q = _squares(g, range(j + 1, i))
        c = q * gi * invert(q)
        img_i = invert(q) * gj * invert(c) * invert(gj) * q
        img_j = (gj**2) * (c**2) * invert(gj)
    return SubstEndo.from_map(g, {i: img_i, j: img_j})


def push_endos(w: Word) -> tuple[SubstEndo, SubstEndo]:
    """(inverse, forward) actions of the push along ``w``.

    The push itself conjugates u -> w u w^-1, so its inverse is u -> w^-1 u w.
    """
    g = w.g
    wi = invert(w)
    gens = [Word.gen(g, k) for k in range(1, g + 1)]
    inv = SubstEndo(g, tuple(wi * u * w for u in gens))
    fwd = SubstEndo(g, tuple(w * u * wi for u in gens))
    return inv, fwd


def gen_endos(gen: McgGen, g: int) -> tuple[SubstEndo, SubstEndo]:
    """(inverse, forward) pi_1 actions of a non-formal generator."""
    if isinstance(gen, YSlide):
        return slide_inverse_endo(g, gen.i, gen.j), slide_forward_endo(g, gen.i, gen.j)
    if isinstance(gen, Push):
        return push_endos(gen.word)
    if isinstance(gen, TSquarePair):
        # T^2_{i,j} = Y_{i;j}^{-1} Y_{j;i}
        i, j = gen.i, gen.j
        inv = compose(slide_forward_endo(g, i, j), slide_inverse_endo(g, j, i))
        fwd = compose(slide_forward_endo(g, j, i), slide_inverse_endo(g, i, j))
        return inv, fwd
    if isinstance(gen, TSquareQuad):
        raise FormalOnly(f"{gen} has no pi_1 action")
    raise TypeError(f"not a catalog generator: {gen!r}")


# -- expressions ---------------------------------------------------------------


@dataclass(frozen=True)
class McgExpr:
    """A product of catalog generators with exponents +-1, left factor first."""

    g: int
    factors: tuple[tuple[McgGen, int], ...] = ()

    def __post_init__(self) -> None:
        for gen, e in self.factors:
            if e not in (1, -1):
                raise ValueError(f"exponent {e} must be +-1")
            validate(gen, self.g)

    @classmethod
    def of(cls, g: int, gen: McgGen, exponent: int = 1) -> McgExpr:
        sign = 1 if exponent > 0 else -1
        return cls(g, ((gen, sign),) * abs(exponent))

    @classmethod
    def identity(cls, g: int) -> McgExpr:
        return cls(g, ())

    @property
    def is_formal(self) -> bool:
        return any(isinstance(gen, TSquareQuad) for gen, _ in self.factors)

    def __mul__(self, other: McgExpr) -> McgExpr:
        if self.g != other.g:
            raise ValueError(f"genus {self.g} != {other.g}")
        return McgExpr(self.g, self.factors + other.factors)

    def inverse(self) -> McgExpr:
        return McgExpr(self.g, tuple((gen, -e) for gen, e in reversed(self.factors)))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(gen) if e == 1 else f"{gen}^-1" for gen, e in self.factors)


def inverse_endo(x: McgExpr) -> SubstEndo:
    """Substitution endomorphism of phi^{-1}, phi the mapping class of ``x``."""
    parts = []
    for gen, e in x.factors:
        inv, fwd = gen_endos(gen, x.g)
        parts.append(inv if e == 1 else fwd)
    return compose_all(parts, x.g)


def forward_endo(x: McgExpr) -> SubstEndo:
    """Substitution endomorphism of phi itself: fwd(x_n) o ... o fwd(x_1)."""
    parts = []
    for gen, e in reversed(x.factors):
        inv, fwd = gen_endos(gen, x.g)
        parts.append(fwd if e == 1 else inv)
    return compose_all(parts, x.g)


# -- parsing -----------------------------------------------------------------

_GEN = re.compile(r"\s*(Y|T2|push)\s*\(")
_INT_LIST = re.compile(r"\s*(-?\d+)\s*((?:,\s*-?\d+\s*)*)\)")
_EXP = re.compile(r"\s*\^\s*(-?\d+)")
_SEP = re.compile(r"\s*(\*|·)")


def parse_expr(text: str, g: int) -> McgExpr:
    """Parse ``Y(1,2)^-1 * T2(1,2,3,4) * push(g1 g2^-1)``; ``1`` is the identity."""
    if text.strip() in ("", "1"):
        return McgExpr.identity(g)
    factors: list[tuple[McgGen, int]] = []
    pos = 0
    while True:
        m = _GEN.match(text, pos)
        if not m:
            raise ExprSyntaxError("expected Y(..), T2(..) or push(..)", _skip(text, pos))
        kind = m.group(1)
        start = m.start(1)
        pos = m.end()
        if kind == "push":
            close = text.find(")", pos)
            if close < 0:
                raise ExprSyntaxError("unclosed push(", start)
            try:
                word = parse_word(text[pos:close], g)
            except WordSyntaxError as err:
                raise ExprSyntaxError(f"bad word: {err}", pos + err.position) from None
            gen: McgGen = Push(word)
            pos = close + 1
        else:
            lm = _INT_LIST.match(text, pos)
            if not lm:
                raise ExprSyntaxError("expected comma-separated integers", _skip(text, pos))
            nums = [int(lm.group(1))] + [int(s) for s in re.findall(r"-?\d+", lm.group(2))]
            pos = lm.end()
            if kind == "Y" and len(nums) == 2:
                gen = YSlide(*nums)
            elif kind == "T2" and len(nums) == 2:
                gen = TSquarePair(*nums)
            elif kind == "T2" and len(nums) == 4:
                gen = TSquareQuad(*nums)
            else:
                raise ExprSyntaxError(f"{kind} takes {'2' if kind == 'Y' else '2 or 4'} indices", start)
            try:
                validate(gen, g)
            except IndexOutOfRange as err:
                raise IndexOutOfRange(f"{err} (at position {start})") from None
        exponent = 1
        em = _EXP.match(text, pos)
        if em:
            exponent = int(em.group(1))
            pos = em.end()
        sign = 1 if exponent > 0 else -1
        factors.extend([(gen, sign)] * abs(exponent))
        sm = _SEP.match(text, pos)
        if sm:
            pos = sm.end()
            continue
        if text[pos:].strip():
            raise ExprSyntaxError("expected '*' or end of input", _skip(text, pos))
        break
    return McgExpr(g, tuple(factors))


def _skip(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


# -- generating sets -----------------------------------------------------------


def _slides(g: int) -> list[McgExpr]:
    return [McgExpr.of(g, YSlide(i, j)) for i in range(1, g) for j in range(1, g + 1) if i != j]


def theorem_generators(g: int, which: str = "thm_1_2") -> list[McgExpr]:
    """Generating sets of Gamma_2(N_g) for g >= 4.

    ``thm_1_2``: Y(i,j) with i <= g-1, plus T2(1,j,k,l) for 1 < j < k < l.
    ``thm_1_1``: the same slides plus T2(i,j,k,l) for every i < j < k < l.
    """
    if g < 4:
        raise ValueError(f"generating sets need genus >= 4, got {g}")
    if which == "thm_1_2":
        quads = [(1, j, k, l) for j, k, l in combinations(range(2, g + 1), 3)]
    elif which == "thm_1_1":
        quads = list(combinations(range(1, g + 1), 4))
    else:
        raise ValueError(f"unknown generating set {which!r}")
    return _slides(g) + [McgExpr.of(g, TSquareQuad(*q)) for q in quads]


@dataclass(frozen=True)
class GeneratorCount:
    g: int
    count: int
    predicted: int

    @property
    def equal(self) -> bool:
        return self.count == self.predicted


def generator_count_identity(g: int) -> GeneratorCount:
    """Size of the reduced generating set against C(g,3) + C(g,2)."""
    count = len(theorem_generators(g, "thm_1_2"))
    assert count == (g - 1) ** 2 + comb(g - 1, 3)
    return GeneratorCount(g, count, comb(g, 3) + comb(g, 2))
