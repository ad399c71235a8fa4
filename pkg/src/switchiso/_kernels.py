"""Pure-Python canonical-form kernels.

Fallback for switchiso._speedups with the identical contract. Bit vectors
are plain ints with edge i at bit i, so there is no edge-count limit here.
"""

from __future__ import annotations

from typing import Iterable, Sequence

backend_name = "python"


class CanonicalScanner:
    """Scans images of a signature under a fixed list of edge permutations.

    canonical_key minimises the coset-reduced image over the whole group,
    which is the decision procedure for switching isomorphism; orbit_min
    minimises the raw image, which partitions edge subsets into
    automorphic types.
    """

    def __init__(
        self,
        edge_perms: Sequence[Sequence[int]],
        pivots: Sequence[int],
        rows: Sequence[int],
        m: int,
    ) -> None:
        self.m = m
        self._perm_bits = tuple(tuple(1 << t for t in p) for p in edge_perms)
        self._reduction = tuple(zip(rows, pivots))

    def reduce(self, bits: int) -> int:
        for vec, piv in self._reduction:
            if (bits >> piv) & 1:
                bits ^= vec
        return bits

    def canonical_key(self, bits: int) -> int:
        reduction = self._reduction
        best = None
        for pb in self._perm_bits:
            img = 0
            b = bits
            while b:
                lsb = b & -b
                img |= pb[lsb.bit_length() - 1]
                b ^= lsb
            for vec, piv in reduction:
                if (img >> piv) & 1:
                    img ^= vec
            if best is None or img < best:
                best = img
        return best if best is not None else self.reduce(bits)

    def canonical_keys(self, bits_seq: Iterable[int]) -> list[int]:
        return [self.canonical_key(b) for b in bits_seq]

    def orbit_min(self, bits: int) -> int:
        best = None
        for pb in self._perm_bits:
            img = 0
            b = bits
            while b:
                lsb = b & -b
                img |= pb[lsb.bit_length() - 1]
                b ^= lsb
            if best is None or img < best:
                best = img
        return best if best is not None else bits
