"""Symplectic Gram-Schmidt over F2.

The working "set" is an ordered list so results are reproducible: pivots
are taken first-in-order and the partner of a pivot is the first member
pairing to 1 with it.  Zero vectors and duplicates produced by the update
rule are dropped, keeping first occurrences.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf2 import BitVec, SympMatrix, _same_n, inner_bits


def _dedupe_nonzero(vectors):
    seen = set()
    out = []
    for x in vectors:
        if x and x not in seen:
            seen.add(x)
            out.append(x)
    return out


def basic_step_bits(omega: Sequence[int], v: int, nbits: int) -> tuple[int | None, list[int]]:
    try:
        pos = omega.index(v)
    except ValueError:
        raise ValueError("pivot must be a member of omega") from None
    rest = list(omega[:pos]) + list(omega[pos + 1 :])
    w = next((f for f in rest if inner_bits(v, f, nbits)), None)
    if w is None:
        return None, _dedupe_nonzero(rest)
    updated = []
    for f in rest:
        if f == w:
            continue
        if inner_bits(v, f, nbits):
            f_new = f ^ w
        else:
            f_new = f
        if inner_bits(w, f, nbits):
            f_new ^= v
        updated.append(f_new)
    return w, _dedupe_nonzero(updated)


@dataclass(frozen=True, slots=True)
class SymplecticBasis:
    """Pairs ``(v_1, w_1), ..., (v_n, w_n)`` with ``<v_j, w_k> = delta_jk``."""

    pairs: tuple[tuple[BitVec, BitVec], ...]

    @property
    def n(self) -> int:
        return len(self.pairs)

    def vectors(self) -> list[BitVec]:
        return [x for pair in self.pairs for x in pair]

    def matrix(self) -> SympMatrix:
        """Matrix with columns v_1, w_1, ..., v_n, w_n."""
        return SympMatrix.from_columns(self.vectors())


def gs_basic_step(omega: Sequence[BitVec], v: BitVec) -> tuple[BitVec | None, list[BitVec]]:
    """One reduction step with pivot ``v``.

    Returns ``(w, omega')`` where ``w`` is the first member pairing to 1
    with ``v`` and every ``f`` in ``omega \\ {v, w}`` is replaced by
    ``f + <v,f> w + <w,f> v``.  If no member pairs with ``v`` the partner
    is None and ``omega'`` is ``omega`` without ``v``.
    """
    for f in omega:
        _same_n(v, f)
    n = v.n
    w, rest = basic_step_bits([f.bits for f in omega], v.bits, 2 * n)
    partner = None if w is None else BitVec(n, w)
    return partner, [BitVec(n, f) for f in rest]


def complete_basis_bits(v: int, nbits: int) -> list[int]:
    """Columns v_1, w_1, ..., v_n, w_n of a symplectic basis with v_1 = v."""
    if not v:
        raise ValueError("cannot complete the zero vector to a symplectic basis")
    omega = _dedupe_nonzero([v] + [1 << j for j in range(nbits)])
    basis = []
    while omega:
        pivot = omega[0]
        w, omega = basic_step_bits(omega, pivot, nbits)
        if w is not None:
            basis += [pivot, w]
    if len(basis) != nbits:
        raise AssertionError("Gram-Schmidt did not produce a full symplectic basis")
    return basis


def complete_symplectic_basis(v: BitVec) -> SymplecticBasis:
    cols = complete_basis_bits(v.bits, 2 * v.n)
    return SymplecticBasis(
        tuple((BitVec(v.n, cols[2 * j]), BitVec(v.n, cols[2 * j + 1])) for j in range(v.n))
    )
