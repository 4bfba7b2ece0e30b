"""Pure-Python GF(2) matrix kernels.

Columns are Python ints used as bitsets: coordinate ``j`` (1-based) of a
column lives at bit ``j - 1``.  The compiled twin in ``_ckernels.pyx``
exposes the same API over packed ``uint64`` words.
"""

NAME = "python"


def _even_mask(nbits):
    return int("01" * ((nbits + 1) // 2), 2) if nbits else 0


def _swap_pairs(x, even):
    return ((x & even) << 1) | ((x >> 1) & even)


class WordMatrix:
    """Mutable scratch matrix, stored column-major."""

    __slots__ = ("nbits", "_cols", "_even")

    def __init__(self, cols, nbits):
        self.nbits = nbits
        self._cols = list(cols)
        self._even = _even_mask(nbits)

    @classmethod
    def identity(cls, nbits):
        return cls([1 << j for j in range(nbits)], nbits)

    def column(self, j):
        return self._cols[j]

    def columns(self):
        return list(self._cols)

    def apply_seq(self, hs, start=0):
        """Left-multiply columns ``start:`` by ``Z_{hs[0]} ... Z_{hs[-1]}``."""
        even = self._even
        pairs = [(h, _swap_pairs(h, even)) for h in reversed(hs) if h]
        if not pairs:
            return
        cols = self._cols
        for j in range(start, len(cols)):
            c = cols[j]
            for h, hsw in pairs:
                if (c & hsw).bit_count() & 1:
                    c ^= h
            cols[j] = c

    def mask_clear(self, mask, start=0):
        cols = self._cols
        return not any(cols[j] & mask for j in range(start, len(cols)))


def mat_mul(a_cols, b_cols, nbits):
    out = []
    for b in b_cols:
        acc = 0
        while b:
            low = b & -b
            acc ^= a_cols[low.bit_length() - 1]
            b ^= low
        out.append(acc)
    return out


def symplectic_violation(cols, nbits):
    """First column pair ``(j, k)``, ``j < k``, breaking ``<c_j, c_k> = [k == j+1, j even]``."""
    even = _even_mask(nbits)
    swapped = [_swap_pairs(c, even) for c in cols]
    for j, c in enumerate(cols):
        for k in range(j + 1, len(cols)):
            want = 1 if (k == j + 1 and j % 2 == 0) else 0
            if (c & swapped[k]).bit_count() & 1 != want:
                return j, k
    return None
