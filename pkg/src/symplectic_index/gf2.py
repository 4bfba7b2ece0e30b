"""Bit-packed vectors and matrices over F2 with the symplectic form.

Vectors live in F2^{2n}.  A vector is stored as a Python int used as a
bitset: coordinate ``j`` (1-based, as in e_1 .. e_2n) is bit ``j - 1``.
Bits at positions ``>= 2n`` are always zero, so equality of two packed
values is plain integer equality.

The symplectic form pairs coordinates (1, 2), (3, 4), ... :

    <v, w> = sum_j v_{2j-1} w_{2j} + v_{2j} w_{2j-1}  (mod 2)

Python-facing indices (``column(j)``, ``BitVec.basis(n, j)``, ...) are
0-based, so index ``j`` corresponds to the basis vector e_{j+1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import _backend


class DimensionError(ValueError):
    """Operands belong to different half-dimensions ``n``."""


class NotSymplecticError(ValueError):
    """A matrix that must lie in Sp(2n) does not."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


@lru_cache(maxsize=None)
def even_mask(nbits: int) -> int:
    """Mask of bit positions 0, 2, 4, ... below ``nbits``."""
    return int("01" * ((nbits + 1) // 2), 2) if nbits else 0


def pair_swap(x: int, nbits: int) -> int:
    """Exchange bits 2k and 2k+1 for every k; ``<v, w> = parity(v & pair_swap(w))``."""
    even = even_mask(nbits)
    return ((x & even) << 1) | ((x >> 1) & even)


def inner_bits(v: int, w: int, nbits: int) -> int:
    return (v & pair_swap(w, nbits)).bit_count() & 1


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"half-dimension n must be a positive integer, got {n!r}")


@dataclass(frozen=True, slots=True)
class BitVec:
    """A vector of F2^{2n}, packed into an int."""

    n: int
    bits: int = 0

    def __post_init__(self):
        _check_n(self.n)
        if self.bits < 0 or self.bits >> (2 * self.n):
            raise ValueError(f"bits {self.bits:#x} do not fit in {2 * self.n} coordinates")

    @classmethod
    def zero(cls, n: int) -> BitVec:
        return cls(n, 0)

    @classmethod
    def basis(cls, n: int, j: int) -> BitVec:
        """Standard basis vector e_{j+1}."""
        if not 0 <= j < 2 * n:
            raise IndexError(f"basis index {j} out of range for n={n}")
        return cls(n, 1 << j)

    @classmethod
    def from_list(cls, coords: Sequence[int]) -> BitVec:
        if len(coords) % 2 or not coords:
            raise ValueError("a vector of F2^{2n} needs a positive even number of coordinates")
        bits = 0
        for j, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError(f"coordinate {j} is {c!r}, expected 0 or 1")
            bits |= c << j
        return cls(len(coords) // 2, bits)

    @property
    def dim(self) -> int:
        return 2 * self.n

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(2 * self.n)]

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < 2 * self.n:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __len__(self) -> int:
        return 2 * self.n

    def __iter__(self):
        return iter(self.to_list())

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: BitVec) -> BitVec:
        _same_n(self, other)
        return BitVec(self.n, self.bits ^ other.bits)

    __xor__ = __add__

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())


@dataclass(frozen=True, slots=True)
class SympMatrix:
    """A 2n x 2n matrix over F2, stored as its columns.

    Column ``j`` is the image of e_{j+1}.  Construction does not check
    membership in Sp(2n); use :func:`is_symplectic` for that.
    """

    n: int
    cols: tuple[int, ...]

    def __post_init__(self):
        _check_n(self.n)
        nbits = 2 * self.n
        if len(self.cols) != nbits:
            raise DimensionError(f"expected {nbits} columns, got {len(self.cols)}")
        for j, c in enumerate(self.cols):
            if c < 0 or c >> nbits:
                raise ValueError(f"column {j} has bits beyond row {nbits}")

    @classmethod
    def identity(cls, n: int) -> SympMatrix:
        return cls(n, tuple(1 << j for j in range(2 * n)))

    @classmethod
    def from_columns(cls, columns: Iterable[BitVec | Sequence[int]]) -> SympMatrix:
        vecs = [c if isinstance(c, BitVec) else BitVec.from_list(c) for c in columns]
        if not vecs:
            raise ValueError("empty matrix")
        n = vecs[0].n
        for v in vecs:
            _same_n(vecs[0], v)
        return cls(n, tuple(v.bits for v in vecs))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> SympMatrix:
        size = len(rows)
        if size == 0 or size % 2 or any(len(r) != size for r in rows):
            raise DimensionError("matrix must be square with an even, positive size")
        cols = [0] * size
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) is {x!r}, expected 0 or 1")
                cols[j] |= x << i
        return cls(size // 2, tuple(cols))

    @property
    def dim(self) -> int:
        return 2 * self.n

    def column(self, j: int) -> BitVec:
        return BitVec(self.n, self.cols[j])

    def entry(self, i: int, j: int) -> int:
        return (self.cols[j] >> i) & 1

    def to_rows(self) -> list[list[int]]:
        size = 2 * self.n
        return [[(c >> i) & 1 for c in self.cols] for i in range(size)]

    def to_text(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.to_rows())

    def __str__(self) -> str:
        return self.to_text()


def _same_n(a, b):
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: n={a.n} vs n={b.n}")


def symplectic_inner(v: BitVec, w: BitVec) -> int:
    _same_n(v, w)
    return inner_bits(v.bits, w.bits, 2 * v.n)


def symplectic_violation(S: SympMatrix) -> tuple[int, int] | None:
    """First 0-based column pair whose pairing differs from Lambda(n), or None."""
    return _backend.kernels.symplectic_violation(list(S.cols), 2 * S.n)


def is_symplectic(S: SympMatrix) -> bool:
    """True iff ``S Lambda S^T = Lambda``, checked through pairings of the columns."""
    return symplectic_violation(S) is None


def require_symplectic(S: SympMatrix) -> None:
    bad = symplectic_violation(S)
    if bad is not None:
        j, k = bad
        got = inner_bits(S.cols[j], S.cols[k], 2 * S.n)
        raise NotSymplecticError(
            f"matrix is not symplectic: <col{j + 1},col{k + 1}>={got}, expected {1 - got}",
            pair=bad,
        )


def mat_vec(S: SympMatrix, v: BitVec) -> BitVec:
    _same_n(S, v)
    acc, bits = 0, v.bits
    while bits:
        low = bits & -bits
        acc ^= S.cols[low.bit_length() - 1]
        bits ^= low
    return BitVec(S.n, acc)


def mat_mul(A: SympMatrix, B: SympMatrix) -> SympMatrix:
    _same_n(A, B)
    return SympMatrix(A.n, tuple(_backend.kernels.mat_mul(A.cols, B.cols, 2 * A.n)))


def direct_sum_embed(S: SympMatrix) -> SympMatrix:
    """Embed Sp(2(n-1)) into Sp(2n) as ``I_2 (+) S``."""
    return SympMatrix(S.n + 1, (1, 2) + tuple(c << 2 for c in S.cols))
