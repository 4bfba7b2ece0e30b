"""Symplectic transvections ``Z_h: v -> v + <v, h> h``.

A transvection is stored by its vector ``h``; ``h = 0`` is the identity.
Sequences follow product notation: ``(h1, h2)`` is ``Z_{h1} Z_{h2}``,
so the last item acts first on a vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _backend
from .gf2 import (
    BitVec,
    DimensionError,
    SympMatrix,
    _same_n,
    even_mask,
    inner_bits,
    pair_swap,
)

# First (v, w) in the order (0,0), (0,1), (1,0), (1,1) that solves
# a*w + b*v = 1 for a block (a, b), packed as a | b << 1.
_SOLUTIONS = {}
for _blk in range(1, 4):
    _a, _b = _blk & 1, _blk >> 1
    _SOLUTIONS[_blk] = [
        (v, w) for v, w in ((0, 0), (0, 1), (1, 0), (1, 1)) if (_a & w) ^ (_b & v)
    ]


def _first_common(xblk, yblk):
    for vw in _SOLUTIONS[xblk]:
        if vw in _SOLUTIONS[yblk]:
            return vw
    raise AssertionError("distinct nonzero blocks always admit a common solution")


def _lowest(mask):
    return (mask & -mask).bit_length() - 1


def find_transvection_bits(x: int, y: int, nbits: int) -> list[int]:
    """h-vectors of at most two transvections taking ``x`` to ``y``.

    ``x == y`` gives ``[0]``; ``<x, y> = 1`` gives ``[x ^ y]``; otherwise an
    intermediate ``z`` with ``<x, z> = <z, y> = 1`` gives ``[x ^ z, z ^ y]``.
    The two vectors in the last case commute, since ``<x^z, z^y> = 0``.
    """
    if not x or not y:
        raise ValueError("transvection search needs two nonzero vectors")
    if x == y:
        return [0]
    if inner_bits(x, y, nbits):
        return [x ^ y]
    even = even_mask(nbits)
    xnz = (x | (x >> 1)) & even
    ynz = (y | (y >> 1)) & even
    both = xnz & ynz
    if both:
        pos = _lowest(both)
        v, w = _first_common((x >> pos) & 3, (y >> pos) & 3)
        z = x ^ (v << pos) ^ (w << (pos + 1))
    else:
        pj = _lowest(xnz & ~ynz)
        pk = _lowest(ynz & ~xnz)
        v, w = _SOLUTIONS[(x >> pj) & 3][0]
        v2, w2 = _SOLUTIONS[(y >> pk) & 3][0]
        z = x ^ (v << pj) ^ (w << (pj + 1)) ^ (v2 << pk) ^ (w2 << (pk + 1))
    return [x ^ z, z ^ y]


def apply_bits(hs: Iterable[int], v: int, nbits: int) -> int:
    """Apply ``Z_{hs[0]} ... Z_{hs[-1]}`` to a packed vector."""
    for h in reversed(list(hs)):
        if h and (v & pair_swap(h, nbits)).bit_count() & 1:
            v ^= h
    return v


@dataclass(frozen=True, slots=True)
class Transvection:
    h: BitVec

    @property
    def n(self) -> int:
        return self.h.n

    def matrix(self) -> SympMatrix:
        n, h = self.h.n, self.h.bits
        return SympMatrix(n, tuple(apply_bits([h], 1 << j, 2 * n) for j in range(2 * n)))


@dataclass(frozen=True, slots=True)
class TransvectionSeq:
    """Product ``Z_{h1} Z_{h2} ... Z_{hk}`` of transvections on F2^{2n}."""

    n: int
    items: tuple[Transvection, ...] = ()

    def __post_init__(self):
        for t in self.items:
            if t.n != self.n:
                raise DimensionError(f"transvection on n={t.n} in a sequence for n={self.n}")

    @classmethod
    def from_bits(cls, n: int, hs: Iterable[int]) -> TransvectionSeq:
        return cls(n, tuple(Transvection(BitVec(n, h)) for h in hs))

    def hs(self) -> list[int]:
        return [t.h.bits for t in self.items]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, k):
        return self.items[k]


def apply_transvection(t: Transvection, v: BitVec) -> BitVec:
    _same_n(t.h, v)
    return BitVec(v.n, apply_bits([t.h.bits], v.bits, 2 * v.n))


def apply_seq(ts: TransvectionSeq, v: BitVec) -> BitVec:
    _same_n(ts, v)
    return BitVec(v.n, apply_bits(ts.hs(), v.bits, 2 * v.n))


def apply_seq_to_matrix(ts: TransvectionSeq, M: SympMatrix) -> SympMatrix:
    """Matrix of the composed map times ``M``, computed column by column."""
    _same_n(ts, M)
    wm = _backend.kernels.WordMatrix(M.cols, 2 * M.n)
    wm.apply_seq(ts.hs())
    return SympMatrix(M.n, tuple(wm.columns()))


def find_transvection(x: BitVec, y: BitVec) -> TransvectionSeq:
    """At most two transvections whose product maps ``x`` to ``y``."""
    _same_n(x, y)
    return TransvectionSeq.from_bits(x.n, find_transvection_bits(x.bits, y.bits, 2 * x.n))
