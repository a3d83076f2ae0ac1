"""Exact linear algebra over GF(2) on packed bit rows.

Every vector is a Python int used as a bitset: coordinate ``k`` is bit ``k``.
XOR on ints is word-packed, so elimination runs at machine-word speed even for
ambient dimensions in the tens of thousands.

Pivots are the lowest set bit of a row (the leftmost column when coordinates
are read in increasing order), so the canonical form of a subspace is the
ordinary reduced row-echelon form with pivots in increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class DimensionMismatch(ValueError):
    """Raised when two operands live in ambient spaces of different dimension."""


class NotInSum(ValueError):
    """Raised by :func:`solve_in_sum` when the target is outside ``a + b``."""


def _check(n1: int, n2: int) -> None:
    if n1 != n2:
        raise DimensionMismatch(f"ambient dimensions differ: {n1} != {n2}")


def lowbit(v: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (v & -v).bit_length() - 1


def bits_of(v: int) -> list[int]:
    """Indices of the set bits of ``v`` in increasing order."""
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


@dataclass(frozen=True)
class GF2Vec:
    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits do not fit in length {self.n}")

    @classmethod
    def from_list(cls, coords: Sequence[int]) -> GF2Vec:
        bits = 0
        for k, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError(f"coordinate {c!r} is not a bit")
            if c:
                bits |= 1 << k
        return cls(len(coords), bits)

    @classmethod
    def unit(cls, n: int, k: int) -> GF2Vec:
        return cls(n, 1 << k)

    def to_list(self) -> list[int]:
        return [(self.bits >> k) & 1 for k in range(self.n)]

    def support(self) -> list[int]:
        return bits_of(self.bits)

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < self.n:
            raise IndexError(k)
        return (self.bits >> k) & 1

    def __len__(self) -> int:
        return self.n

    def __add__(self, other: GF2Vec) -> GF2Vec:
        _check(self.n, other.n)
        return GF2Vec(self.n, self.bits ^ other.bits)

    __sub__ = __add__

    def __bool__(self) -> bool:
        return self.bits != 0

    def dot(self, other: GF2Vec) -> int:
        _check(self.n, other.n)
        return bin(self.bits & other.bits).count("1") & 1


@dataclass(frozen=True)
class GF2Matrix:
    ncols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise DimensionMismatch(f"row does not fit in {self.ncols} columns")

    @classmethod
    def from_vecs(cls, vecs: Iterable[GF2Vec], ncols: int) -> GF2Matrix:
        rows = []
        for v in vecs:
            _check(v.n, ncols)
            rows.append(v.bits)
        return cls(ncols, tuple(rows))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> GF2Matrix:
        if not rows:
            raise ValueError("cannot infer column count from zero rows")
        vecs = [GF2Vec.from_list(r) for r in rows]
        return cls.from_vecs(vecs, vecs[0].n)

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, tuple(1 << k for k in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def vec(self, i: int) -> GF2Vec:
        return GF2Vec(self.ncols, self.rows[i])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> GF2Matrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                cols[j] |= 1 << i
        return GF2Matrix(self.nrows, tuple(cols))

    def mul_vec(self, v: GF2Vec) -> GF2Vec:
        """Return ``M v`` (``v`` indexed by columns, result by rows)."""
        _check(self.ncols, v.n)
        out = 0
        for i, r in enumerate(self.rows):
            if bin(r & v.bits).count("1") & 1:
                out |= 1 << i
        return GF2Vec(self.nrows, out)

    def __matmul__(self, other: GF2Matrix) -> GF2Matrix:
        _check(self.ncols, other.nrows)
        rows = []
        for r in self.rows:
            acc = 0
            for k in bits_of(r):
                acc ^= other.rows[k]
            rows.append(acc)
        return GF2Matrix(other.ncols, tuple(rows))


class Echelon:
    """Incremental row-echelon form keyed by pivot (lowest set bit).

    This is the mutable work area behind every public routine here; the
    public values built from it are immutable.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        """Clear pivot bits from the bottom up until the low bit is free."""
        rows = self.rows
        while v:
            p = lowbit(v)
            r = rows.get(p)
            if r is None:
                return v
            v ^= r
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        v = self.reduce(v)
        if v:
            self.rows[lowbit(v)] = v
            return True
        return False

    def extend(self, vs: Iterable[int]) -> None:
        for v in vs:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    def rref(self) -> tuple[int, ...]:
        """Fully reduced rows ordered by increasing pivot."""
        rows = dict(self.rows)
        mask = 0
        for p in rows:
            mask |= 1 << p
        for p in sorted(rows, reverse=True):
            r = rows[p]
            extra = (r & mask) ^ (1 << p)
            while extra:
                q = extra.bit_length() - 1
                r ^= rows[q]
                extra = (r & mask) ^ (1 << p)
            rows[p] = r
        return tuple(rows[p] for p in sorted(rows))


def _rank_ints(rows: Iterable[int], n: int) -> int:
    e = Echelon(n)
    e.extend(rows)
    return len(e)


def rank(m: GF2Matrix) -> int:
    """GF(2) row rank of ``m``."""
    return _rank_ints(m.rows, m.ncols)


def rref(m: GF2Matrix) -> GF2Matrix:
    """Reduced row-echelon form with zero rows dropped."""
    e = Echelon(m.ncols)
    e.extend(m.rows)
    return GF2Matrix(m.ncols, e.rref())


@dataclass(frozen=True)
class Subspace:
    """A row space in canonical (reduced echelon) form.

    Construct through :meth:`span`; the raw constructor trusts its input.
    """

    ambient: int
    basis: tuple[int, ...] = ()

    @classmethod
    def span(cls, vectors: Iterable[int | GF2Vec], ambient: int) -> Subspace:
        e = Echelon(ambient)
        limit = 1 << ambient
        for v in vectors:
            if isinstance(v, GF2Vec):
                _check(v.n, ambient)
                v = v.bits
            elif v < 0 or v >= limit:
                raise DimensionMismatch(f"vector does not fit in ambient {ambient}")
            e.add(v)
        return cls(ambient, e.rref())

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls(ambient, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> GF2Matrix:
        return GF2Matrix(self.ambient, self.basis)

    def echelon(self) -> Echelon:
        e = Echelon(self.ambient)
        for r in self.basis:
            e.rows[lowbit(r)] = r
        return e

    def contains(self, v: int | GF2Vec) -> bool:
        if isinstance(v, GF2Vec):
            _check(v.n, self.ambient)
            v = v.bits
        return self.echelon().reduce(v) == 0

    def __contains__(self, v: int | GF2Vec) -> bool:
        return self.contains(v)

    def __le__(self, other: Subspace) -> bool:
        _check(self.ambient, other.ambient)
        e = other.echelon()
        return all(e.reduce(r) == 0 for r in self.basis)


def span_membership(v: GF2Vec, s: Subspace) -> bool:
    """True iff ``v`` is a GF(2) combination of the basis of ``s``."""
    _check(v.n, s.ambient)
    return s.contains(v.bits)


class SumIntersection(NamedTuple):
    sum: Subspace
    intersection: Subspace


def subspace_ops(a: Subspace, b: Subspace) -> SumIntersection:
    """Sum and intersection via the Zassenhaus stacking ``[a|a]`` over ``[b|0]``."""
    _check(a.ambient, b.ambient)
    n = a.ambient
    e = Echelon(2 * n)
    for r in a.basis:
        e.add(r | (r << n))
    for r in b.basis:
        e.add(r)
    low_mask = (1 << n) - 1
    sum_rows = []
    meet_rows = []
    for p, r in e.rows.items():
        if p < n:
            sum_rows.append(r & low_mask)
        else:
            meet_rows.append(r >> n)
    return SumIntersection(Subspace.span(sum_rows, n), Subspace.span(meet_rows, n))


class SumSolver:
    """Decomposes vectors of ``a + b`` as ``u + w`` with ``u`` in ``a``, ``w`` in ``b``.

    Rows carry their ``a``-component in the bits above ``n``. Pivots are always
    taken in the low ``n`` bits, so the decomposition is a pure function of the
    two canonical bases and the target.
    """

    def __init__(self, a: Subspace, b: Subspace):
        _check(a.ambient, b.ambient)
        self.n = n = a.ambient
        self._low = (1 << n) - 1
        rows: dict[int, int] = {}
        for r in [x | (x << n) for x in a.basis] + list(b.basis):
            while r & self._low:
                p = lowbit(r)
                q = rows.get(p)
                if q is None:
                    rows[p] = r
                    break
                r ^= q
        self._rows = rows

    def solve(self, t: int) -> tuple[int, int]:
        low = self._low
        v = t
        rows = self._rows
        while v & low:
            q = rows.get(lowbit(v))
            if q is None:
                raise NotInSum("target is not in a + b")
            v ^= q
        u = v >> self.n
        return u, t ^ u


def solve_in_sum(t: GF2Vec, a: Subspace, b: Subspace) -> tuple[GF2Vec, GF2Vec]:
    """Return ``(u, w)`` with ``u`` in ``a``, ``w`` in ``b`` and ``t = u + w``."""
    _check(t.n, a.ambient)
    u, w = SumSolver(a, b).solve(t.bits)
    return GF2Vec(t.n, u), GF2Vec(t.n, w)


def quotient_dim(a: Subspace, b: Subspace) -> int:
    """``dim((a + b) / b)``, the number of directions ``a`` adds to ``b``."""
    _check(a.ambient, b.ambient)
    e = b.echelon()
    before = len(e)
    e.extend(a.basis)
    return len(e) - before


def kernel(pairs: Iterable[tuple[int, int]], source_ambient: int, target_ambient: int) -> Subspace:
    """Kernel of the linear map defined by ``(source, image)`` pairs on their span.

    The sources need not be independent; the result is the subspace of their
    span that maps to zero.
    """
    n = target_ambient
    e = Echelon(n + source_ambient)
    for src, img in pairs:
        e.add(img | (src << n))
    return Subspace.span((r >> n for p, r in e.rows.items() if p >= n), source_ambient)
