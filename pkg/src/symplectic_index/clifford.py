"""Clifford group elements (modulo global phase) as symplectic matrices plus phases.

An index ``i`` in ``[0, |C_n|)`` splits as ``i = p * |Sp(2n)| + i_sp``:
the low digit ``i_sp`` picks the symplectic part through
:func:`symplectic_n3`, and ``p`` in ``[0, 4^n)`` packs the phase bits
LSB-first as ``r_1 .. r_n`` followed by ``s_1 .. s_n``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import SympMatrix, _check_n, require_symplectic
from .indexer import sp_order, symplectic_inverse, symplectic_n3


def clifford_order(n: int) -> int:
    """|C_n| = 2^{n^2 + 2n} prod_{j=1}^{n} (4^j - 1)."""
    return sp_order(n) << (2 * n)


def _bits_tuple(bits, n, name):
    out = tuple(int(b) for b in bits)
    if len(out) != n or any(b not in (0, 1) for b in out):
        raise ValueError(f"{name} must be {n} bits in {{0, 1}}, got {bits!r}")
    return out


@dataclass(frozen=True, slots=True)
class CliffordElement:
    """Symplectic part ``S`` with phase bits: ``U X_j U^+ = (-1)^{r_j} ...``, ``U Z_j U^+ = (-1)^{s_j} ...``."""

    S: SympMatrix
    r: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", _bits_tuple(self.r, self.S.n, "r"))
        object.__setattr__(self, "s", _bits_tuple(self.s, self.S.n, "s"))

    @property
    def n(self) -> int:
        return self.S.n

    @classmethod
    def identity(cls, n: int) -> CliffordElement:
        return cls(SympMatrix.identity(n), (0,) * n, (0,) * n)


@dataclass(frozen=True, eq=False)
class Tableau:
    """Conjugation action ``(alpha, beta, gamma, delta, r, s)`` as uint8 arrays.

    Row ``j`` of ``alpha``/``beta`` gives the X and Z exponents of the image
    of ``X_j``; ``gamma``/``delta`` do the same for ``Z_j``.
    """

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    delta: np.ndarray
    r: np.ndarray
    s: np.ndarray

    @property
    def n(self) -> int:
        return self.r.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return all(
            np.array_equal(getattr(self, f), getattr(other, f))
            for f in ("alpha", "beta", "gamma", "delta", "r", "s")
        )


def to_tableau(c: CliffordElement) -> Tableau:
    """Read ``(alpha, beta, gamma, delta)`` off the columns of ``S``.

    Column 2j-1 holds ``(alpha_j1, beta_j1, ..., alpha_jn, beta_jn)`` and
    column 2j holds the same for ``gamma``/``delta``.
    """
    n = c.n
    rows = np.array(c.S.to_rows(), dtype=np.uint8)
    x_images = rows[:, 0::2].T  # row j: column 2j-1 of S
    z_images = rows[:, 1::2].T
    return Tableau(
        alpha=x_images[:, 0::2].copy(),
        beta=x_images[:, 1::2].copy(),
        gamma=z_images[:, 0::2].copy(),
        delta=z_images[:, 1::2].copy(),
        r=np.array(c.r, dtype=np.uint8).reshape(n),
        s=np.array(c.s, dtype=np.uint8).reshape(n),
    )


def from_tableau(t: Tableau) -> CliffordElement:
    n = t.n
    for name in ("alpha", "beta", "gamma", "delta"):
        if getattr(t, name).shape != (n, n):
            raise ValueError(f"{name} must be {n}x{n}, got {getattr(t, name).shape}")
    if t.s.shape != (n,):
        raise ValueError(f"s must have {n} bits")
    rows = np.zeros((2 * n, 2 * n), dtype=np.uint8)
    rows[0::2, 0::2] = t.alpha.T
    rows[1::2, 0::2] = t.beta.T
    rows[0::2, 1::2] = t.gamma.T
    rows[1::2, 1::2] = t.delta.T
    S = SympMatrix.from_rows(rows.tolist())
    require_symplectic(S)
    return CliffordElement(S, tuple(t.r.tolist()), tuple(t.s.tolist()))


def index_to_clifford(n: int, i: int) -> CliffordElement:
    order = clifford_order(n)
    if not isinstance(i, int) or not 0 <= i < order:
        raise ValueError(f"index {i!r} out of range [0, {order}) for the {n}-qubit Clifford group")
    p, i_sp = divmod(i, sp_order(n))
    r = tuple((p >> j) & 1 for j in range(n))
    s = tuple((p >> (n + j)) & 1 for j in range(n))
    return CliffordElement(symplectic_n3(n, i_sp), r, s)


def clifford_to_index(n: int, c: CliffordElement) -> int:
    _check_n(n)
    if c.n != n:
        raise ValueError(f"element acts on {c.n} qubits, expected {n}")
    p = 0
    for j, bit in enumerate(c.r + c.s):
        p |= bit << j
    return p * sp_order(n) + symplectic_inverse(n, c.S)


def make_rng(seed: int | None = None) -> np.random.Generator:
    """PCG64 generator; sampled streams depend only on this and the seed."""
    if seed is not None and not 0 <= seed < 1 << 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return np.random.Generator(np.random.PCG64(seed))


def uniform_below(bound: int, rng: np.random.Generator) -> int:
    """Uniform integer in ``[0, bound)`` by rejection on ceil(log2 bound)-bit blocks.

    Each attempt consumes ``ceil(bits / 64)`` raw 64-bit outputs of the
    bit generator, assembled little-endian and masked to ``bits``.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    nbits = (bound - 1).bit_length()
    if nbits == 0:
        return 0
    nwords = (nbits + 63) // 64
    mask = (1 << nbits) - 1
    while True:
        words = rng.bit_generator.random_raw(nwords)
        x = int.from_bytes(np.asarray(words, dtype="<u8").tobytes(), "little") & mask
        if x < bound:
            return x


def sample_symplectic(n: int, rng: np.random.Generator) -> tuple[int, SympMatrix]:
    i = uniform_below(sp_order(n), rng)
    return i, symplectic_n3(n, i)


def sample_clifford(n: int, rng: np.random.Generator) -> tuple[int, CliffordElement]:
    """Uniformly random Clifford element together with its index."""
    i = uniform_below(clifford_order(n), rng)
    return i, index_to_clifford(n, i)
