"""Standard Magnus expansion gamma_i -> 1 + C_i over GF(2), truncated at degree 2."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .freegroup import Word
from .gf2 import Subspace, bits_of, span_membership
from .tensor import GenusMismatch, HClass, Tensor, omega


@dataclass(frozen=True)
class JetDeg2:
    """1 + deg1 + deg2 modulo degree >= 3, stored as packed bits."""

    g: int
    h: int = 0
    t: int = 0

    @property
    def deg1(self) -> HClass:
        return HClass(self.g, self.h)

    @property
    def deg2(self) -> Tensor:
        return Tensor(self.g, 2, self.t)

    def __mul__(self, other: JetDeg2) -> JetDeg2:
        if self.g != other.g:
            raise GenusMismatch(f"genus {self.g} != {other.g}")
        return JetDeg2(self.g, self.h ^ other.h, self.t ^ other.t ^ _outer(self.g, self.h, other.h))

    @classmethod
    def unit(cls, g: int) -> JetDeg2:
        return cls(g)


def _outer(g: int, x: int, y: int) -> int:
    out = 0
    for i in bits_of(x):
        out ^= y << (i * g)
    return out


def theta2(w: Word) -> JetDeg2:
    """Stream the letters through the running jet.

    Multiplying by 1 + C_i adds h (x) C_i to degree 2; the inverse letter
    (1 + C_i + C_i (x) C_i) additionally adds C_i (x) C_i.
    """
    g = w.g
    h = 0
    t = 0
    # spread has bit r*g for every r in h, so h (x) C_i is spread << i
    spread = 0
    for a in w.letters:
        i = abs(a) - 1
        t ^= spread << i
        if a < 0:
            t ^= 1 << (i * g + i)
        h ^= 1 << i
        spread ^= 1 << (i * g)
    return JetDeg2(g, h, t)


@lru_cache(maxsize=None)
def omega_span(g: int) -> Subspace:
    return Subspace.span([omega(g).bits], g * g)


def in_omega_span(t: Tensor) -> bool:
    return span_membership(t.coords, omega_span(t.g))


def theta2_bar_eq(u: Word, v: Word) -> bool:
    """Equality of the induced values in H^{(x)2}/<omega> (and in H)."""
    if u.g != v.g:
        raise GenusMismatch(f"genus {u.g} != {v.g}")
    a, b = theta2(u), theta2(v)
    return a.h == b.h and in_omega_span(a.deg2 + b.deg2)
