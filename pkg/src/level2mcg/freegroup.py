"""Words in the free group on gamma_1..gamma_g and substitution endomorphisms.

A letter is a nonzero int: ``+i`` is gamma_i and ``-i`` its inverse. Products
follow path concatenation, so ``u * v`` reads u's letters then v's.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .tensor import GenusMismatch


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word. Construction always reduces."""

    g: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.g < 1:
            raise ValueError("genus must be positive")
        for a in self.letters:
            if a == 0 or abs(a) > self.g:
                raise ValueError(f"letter {a} out of range for genus {self.g}")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def _trusted(cls, g: int, letters: Iterable[int]) -> Word:
        """Build from letters already known to be in range (still reduces)."""
        w = object.__new__(cls)
        object.__setattr__(w, "g", g)
        object.__setattr__(w, "letters", _reduce(letters))
        return w

    @classmethod
    def gen(cls, g: int, i: int) -> Word:
        return cls(g, (i,))

    @classmethod
    def identity(cls, g: int) -> Word:
        return cls(g, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else invert(self)
        return Word(self.g, base.letters * abs(n))

    def __str__(self) -> str:
        return format_word(self)


def reduce(g: int, letters: Sequence[int]) -> Word:
    return Word(g, tuple(letters))


def concat(u: Word, v: Word) -> Word:
    if u.g != v.g:
        raise GenusMismatch(f"genus {u.g} != {v.g}")
    return Word._trusted(u.g, u.letters + v.letters)


def invert(u: Word) -> Word:
    return Word._trusted(u.g, tuple(-a for a in reversed(u.letters)))


def relator(g: int) -> Word:
    """The boundary word gamma_1^2 ... gamma_g^2."""
    return Word(g, tuple(i for i in range(1, g + 1) for _ in range(2)))


def cyclic_reduce(u: Word) -> Word:
    a = u.letters
    lo, hi = 0, len(a)
    while hi - lo >= 2 and a[lo] == -a[hi - 1]:
        lo += 1
        hi -= 1
    return Word(u.g, a[lo:hi])


def is_rotation(u: Word, v: Word) -> bool:
    if len(u) != len(v):
        return False
    if not u.letters:
        return True
    doubled = v.letters + v.letters
    n = len(u)
    return any(doubled[s : s + n] == u.letters for s in range(n))


_TOKEN = re.compile(r"\s*(?:g|gamma_?)(\d+)(?:\^(-?\d+))?")


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_word(text: str, g: int) -> Word:
    """Parse ``g1 g2^-1 g1^2`` style text; ``1`` or an empty string is the identity."""
    letters: list[int] = []
    pos = 0
    stripped = text.strip()
    if stripped in ("", "1", "e"):
        return Word.identity(g)
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected {text[pos:].strip()[:1]!r}", pos)
        i = int(m.group(1))
        if not 1 <= i <= g:
            raise WordSyntaxError(f"generator g{i} out of range for genus {g}", m.start(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([i if e > 0 else -i] * abs(e))
        pos = m.end()
    return Word(g, tuple(letters))


def format_word(u: Word) -> str:
    """Inverse of :func:`parse_word`; runs of a letter are collapsed to powers."""
    if not u.letters:
        return "1"
    out = []
    a = u.letters
    k = 0
    while k < len(a):
        m = k
        while m < len(a) and a[m] == a[k]:
            m += 1
        n = m - k
        e = n if a[k] > 0 else -n
        out.append(f"g{abs(a[k])}" if e == 1 else f"g{abs(a[k])}^{e}")
        k = m
    return " ".join(out)


@dataclass(frozen=True)
class SubstEndo:
    """The endomorphism gamma_i -> images[i-1]."""

    g: int
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.g:
            raise ValueError(f"need {self.g} images, got {len(self.images)}")
        for w in self.images:
            if w.g != self.g:
                raise GenusMismatch(f"image genus {w.g} != {self.g}")

    @classmethod
    def identity(cls, g: int) -> SubstEndo:
        return cls(g, tuple(Word.gen(g, i) for i in range(1, g + 1)))

    @classmethod
    def from_map(cls, g: int, changes: dict[int, Word]) -> SubstEndo:
        """Identity except on the listed generators."""
        return cls(g, tuple(changes.get(i, Word.gen(g, i)) for i in range(1, g + 1)))

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __str__(self) -> str:
        return ", ".join(f"g{i + 1} -> {format_word(w)}" for i, w in enumerate(self.images))


def _tables(e: SubstEndo) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    pos = [im.letters for im in e.images]
    neg = [tuple(-a for a in reversed(im.letters)) for im in e.images]
    return pos, neg


def _substitute(g: int, tables, letters: Sequence[int]) -> Word:
    pos, neg = tables
    out: list[int] = []
    for a in letters:
        out.extend(pos[a - 1] if a > 0 else neg[-a - 1])
    return Word._trusted(g, out)


def apply(e: SubstEndo, w: Word) -> Word:
    if e.g != w.g:
        raise GenusMismatch(f"genus {e.g} != {w.g}")
    return _substitute(e.g, _tables(e), w.letters)


def compose(e1: SubstEndo, e2: SubstEndo) -> SubstEndo:
    """``e1 o e2``: apply e2 first, then e1."""
    if e1.g != e2.g:
        raise GenusMismatch(f"genus {e1.g} != {e2.g}")
    tables = _tables(e1)
    return SubstEndo(e1.g, tuple(_substitute(e1.g, tables, w.letters) for w in e2.images))


def compose_all(endos: Sequence[SubstEndo], g: int) -> SubstEndo:
    """``endos[0] o endos[1] o ...``; identity for an empty sequence."""
    out = SubstEndo.identity(g)
    for e in endos:
        out = compose(out, e)
    return out


def descends_to_pi(e: SubstEndo) -> bool:
    """True iff e sends the relator to a cyclic rotation of itself or its inverse.

    This is a strong sufficient form of preserving the normal closure, which
    every catalog endomorphism satisfies.
    """
    r = relator(e.g)
    image = cyclic_reduce(apply(e, r))
    return is_rotation(image, r) or is_rotation(image, invert(r))
