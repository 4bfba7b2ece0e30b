"""Ranking and unranking of Sp(2n, F2).

Elements are built along the subgroup chain Sp(2) < Sp(4) < ... < Sp(2n),
where Sp(2(n-1)) sits inside Sp(2n) as ``I_2 (+) S``.  A coset of
Sp(2(n-1)) is a symplectic pair ``(v, w)`` (the first two columns), and
there are ``N(n) = 2^{2n-1} (2^{2n} - 1)`` of them.  An index ``i`` is read
as mixed-radix digits: the low digit ``i mod N(n)`` picks the coset at the
top level and ``i // N(n)`` is the index at the next level down.

Bit strings are read LSB-first everywhere: coordinate 1 of a vector is
the least significant bit of the integer it is expanded from.

All levels are processed in a loop over the full 2n-dimensional space;
level ``p`` (0-based) acts on the coordinates of blocks ``p, ..., n-1``.
"""
from __future__ import annotations

from functools import lru_cache
from math import prod

from . import _backend
from .gf2 import SympMatrix, _check_n, require_symplectic
from .sympgs import basic_step_bits, complete_basis_bits
from .transvect import TransvectionSeq, apply_bits, find_transvection_bits


class InvariantViolation(RuntimeError):
    """Internal consistency check failed: corrupt input or a bug."""


@lru_cache(maxsize=None)
def sp_order(n: int) -> int:
    """|Sp(2n, F2)| = 2^{n^2} prod_{j=1}^{n} (4^j - 1)."""
    _check_n(n)
    return (1 << (n * n)) * prod((1 << (2 * j)) - 1 for j in range(1, n + 1))


def coset_count(n: int) -> int:
    """Number of symplectic pairs in F2^{2n}, |Sp(2n)| / |Sp(2(n-1))|."""
    _check_n(n)
    return (1 << (2 * n - 1)) * ((1 << (2 * n)) - 1)


def bits_to_int(bits) -> int:
    """LSB-first: ``(1, 0, 0, 0) -> 1``, ``(0, 1, 0, 0) -> 2``."""
    value = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit {j} is {b!r}, expected 0 or 1")
        value |= b << j
    return value


def int_to_bits(value: int, width: int) -> list[int]:
    if value < 0 or value >> width:
        raise OverflowError(f"{value} does not fit in {width} bits")
    return [(value >> j) & 1 for j in range(width)]


def _check_index(n, i):
    order = sp_order(n)
    if not isinstance(i, int) or not 0 <= i < order:
        raise ValueError(f"index {i!r} out of range [0, {order}) for Sp({2 * n})")


def _levels(n, i):
    """Yield ``(p, m, k, q)`` per level: block offset, sub-dimension, k = (i mod s)+1, i // s."""
    for p in range(n):
        m = n - p
        s = (1 << (2 * m)) - 1
        q, r = divmod(i, s)
        yield p, m, r + 1, q
        i = q >> (2 * m - 1)


def _level_transvections(n, i):
    """Per-level ``T'T`` h-vectors of the transvection construction, in full coordinates."""
    nbits = 2 * n
    out = []
    for p, m, k, q in _levels(n, i):
        shift = 2 * p
        e1 = 1 << shift
        f1 = k << shift
        t = find_transvection_bits(e1, f1, nbits)
        b = q & 1
        rest = (q >> 1) & ((1 << (2 * m - 2)) - 1)
        e_prime = e1 | (rest << (shift + 2))
        h0 = apply_bits(t, e_prime, nbits)
        t_prime = [h0] if b else [f1, h0]
        out.append(t_prime + t)
    return out


def symplectic_n3(n: int, i: int) -> SympMatrix:
    """The ``i``-th element of Sp(2n) via transvections, O(n^3)."""
    _check_n(n)
    _check_index(n, i)
    levels = _level_transvections(n, i)
    wm = _backend.kernels.WordMatrix.identity(2 * n)
    # Level p fixes e_1 .. e_{2p}, so only columns from 2p on can move.
    for p in reversed(range(n)):
        wm.apply_seq(levels[p], start=2 * p)
    return SympMatrix(n, tuple(wm.columns()))


def level_maps(n: int, i: int) -> list[TransvectionSeq]:
    """The coset representative ``T'T`` of each level as a transvection sequence."""
    _check_n(n)
    _check_index(n, i)
    return [TransvectionSeq.from_bits(n, hs) for hs in _level_transvections(n, i)]


def _coset_matrix_n4(m, k, q):
    """Columns v_1, w_1', v_2', w_2', ... of the Gram-Schmidt coset representative."""
    nbits = 2 * m
    basis = complete_basis_bits(k, nbits)
    v1, w1 = basis[0], basis[1]
    b = q & 1
    bs = (q >> 1) & ((1 << (m - 1)) - 1)
    cs = (q >> m) & ((1 << (m - 1)) - 1)
    w1p = w1 ^ (v1 if b else 0)
    for j in range(1, m):
        if (bs >> (j - 1)) & 1:
            w1p ^= basis[2 * j]
        if (cs >> (j - 1)) & 1:
            w1p ^= basis[2 * j + 1]
    # Replacing w_1 by w_1' breaks <w_1', v_j> = c_j; one more reduction
    # step against the pair (v_1, w_1') restores a symplectic basis.
    partner, rest = basic_step_bits([v1, w1p] + basis[2:], v1, nbits)
    if partner != w1p or len(rest) != nbits - 2:
        raise InvariantViolation("re-orthogonalisation against (v1, w1') failed")
    return [v1, w1p] + rest


def symplectic_n4(n: int, i: int) -> SympMatrix:
    """The ``i``-th element of Sp(2n) via symplectic Gram-Schmidt, O(n^4).

    Uses a different canonical map from :func:`symplectic_n3`.
    """
    _check_n(n)
    _check_index(n, i)
    cosets = [_coset_matrix_n4(m, k, q) for _, m, k, q in _levels(n, i)]
    acc = cosets[-1]
    for m in range(2, n + 1):
        g = cosets[n - m]
        embedded = [1, 2] + [c << 2 for c in acc]
        acc = _backend.kernels.mat_mul(g, embedded, 2 * m)
    return SympMatrix(n, tuple(acc))


def _peel(g: SympMatrix):
    """Reduce ``g`` to the identity one level at a time.

    Returns, per level, ``(v, tw, b, hs)``: the level's first column, its
    second column after ``T``, the coefficient of e1 in it, and the
    h-vectors of ``V = Z_{e1}^{1-b} Z_{h0} T``.
    """
    n = g.n
    nbits = 2 * n
    wm = _backend.kernels.WordMatrix(g.cols, nbits)
    records = []
    for p in range(n):
        shift = 2 * p
        e1, e2 = 1 << shift, 2 << shift
        v, w = wm.column(shift), wm.column(shift + 1)
        t = find_transvection_bits(v, e1, nbits)
        tw = apply_bits(t, w, nbits)
        if (tw >> shift) & 3 not in (2, 3):
            raise InvariantViolation(f"level {p}: T w lacks the e2 component")
        b = (tw >> shift) & 1
        h0 = e1 | (tw >> (shift + 2) << (shift + 2))
        hs = ([e1] if not b else []) + [h0] + t
        wm.apply_seq(hs, start=shift)
        if wm.column(shift) != e1 or wm.column(shift + 1) != e2:
            raise InvariantViolation(f"level {p}: leading 2x2 block is not the identity")
        if not wm.mask_clear(e1 | e2, start=shift + 2):
            raise InvariantViolation(f"level {p}: rows of the leading block are not clear")
        records.append((v, tw, b, hs))
    return records


def symplectic_inverse(n: int, g: SympMatrix) -> int:
    """Index of ``g`` under :func:`symplectic_n3`; exact inverse of it."""
    _check_n(n)
    if g.n != n:
        raise ValueError(f"matrix is {2 * g.n}x{2 * g.n}, expected n={n}")
    require_symplectic(g)
    digits = []
    for p, (v, tw, b, _) in enumerate(_peel(g)):
        m = n - p
        shift = 2 * p
        z_v = (v >> shift) - 1
        z_w = b | ((tw >> (shift + 2)) << 1)
        digits.append(z_w * ((1 << (2 * m)) - 1) + z_v)
    # Horner from the innermost level keeps every product small-by-big.
    index = 0
    for p in reversed(range(n)):
        index = index * coset_count(n - p) + digits[p]
    return index


def transvection_factorization(g: SympMatrix) -> TransvectionSeq:
    """Write ``g`` as a product of at most 4n transvections (identities dropped)."""
    require_symplectic(g)
    hs = []
    for *_, level in _peel(g):
        # V g_p = I (+) g_{p+1} with V an ordered product of involutions,
        # so V^{-1} is the reversed list.
        for h in reversed(level):
            if not h:
                continue
            # Z_h Z_h = I: cancel adjacent repeats as they appear.
            if hs and hs[-1] == h:
                hs.pop()
            else:
                hs.append(h)
    return TransvectionSeq.from_bits(g.n, hs)
