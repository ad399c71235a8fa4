"""Signatures on simple graphs and the GF(2) switching machinery.

A signature is the set of negative edges of a signed graph, stored as a bit
vector over the graph's edge indexing. Switching at a vertex set S flips
exactly the edges with one endpoint in S, which is the same as adding the
cut delta(S) over GF(2). Two signatures are therefore switching equivalent
exactly when their difference lies in the cut space, and that membership
test against a row-echelon basis of the single-vertex cuts is how
equivalence is decided here. Comparing sets of unbalanced cycles gives the
same relation and is kept as a cross-check in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    GraphMismatch,
    InvalidParam,
    InvalidVertex,
    NotAnEdge,
)
from .graphs import Cycle, Graph, enumerate_cycles


@dataclass(frozen=True)
class Signature:
    """Negative-edge set of a signed graph, as a bit vector over edge indices."""

    graph: Graph
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < 1 << self.graph.m:
            raise InvalidParam(f"bit vector {self.bits:#x} out of range for m={self.graph.m}")

    @property
    def size(self) -> int:
        """Number of negative edges."""
        return self.bits.bit_count()

    @property
    def negative_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.graph.edges[e] for e in _iter_bits(self.bits))

    def __str__(self) -> str:
        return ",".join(f"{u}-{v}" for u, v in self.negative_edges)


@dataclass(frozen=True)
class Gf2Basis:
    """Reduced row-echelon basis of the cut space over GF(2).

    Each row is delta(S) for the vertex set recorded in row_switch_sets, so
    coset membership tests can also recover an explicit switching witness.
    Pivot positions strictly increase and the rank is always n - c.
    """

    graph: Graph
    rows: tuple[int, ...]
    pivots: tuple[int, ...]
    row_switch_sets: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def coset_count(self) -> int:
        """Number of cosets, 2^(m - n + c)."""
        return 1 << (self.graph.m - self.rank)


@dataclass(frozen=True)
class CycleSpectrum:
    """Counts of negative cycles per length, a switching-class invariant."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "CycleSpectrum":
        return cls(tuple(sorted(d.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def count(self, length: int) -> int:
        return self.as_dict().get(length, 0)

    def triple(self) -> tuple[int, int, int]:
        """Counts for lengths 3, 4 and 5."""
        d = self.as_dict()
        return (d.get(3, 0), d.get(4, 0), d.get(5, 0))

    def is_zero(self) -> bool:
        return all(v == 0 for _, v in self.counts)

    def __str__(self) -> str:
        return " ".join(f"{k}:{v}" for k, v in self.counts)


def _iter_bits(bits: int):
    while bits:
        lsb = bits & -bits
        yield lsb.bit_length() - 1
        bits ^= lsb


def parse_signature(g: Graph, pairs: Iterable[Sequence[int]]) -> Signature:
    """Signature with exactly the given edges negative.

    Raises NotAnEdge for pairs outside the graph and DuplicateEdge when a
    pair repeats (in either orientation).
    """
    bits = 0
    for pair in pairs:
        u, v = pair
        e = g.edge_id(u, v)
        if (bits >> e) & 1:
            raise DuplicateEdge(f"edge ({u},{v}) listed twice")
        bits |= 1 << e
    return Signature(g, bits)


def signature_from_string(g: Graph, text: str) -> Signature:
    """Parse the `u-v,u-v,...` signature format; the empty string is the
    all-positive signature."""
    text = text.strip()
    if not text:
        return Signature(g, 0)
    pairs = []
    for token in text.split(","):
        parts = token.strip().split("-")
        if len(parts) != 2:
            raise InvalidParam(f"bad signature token {token.strip()!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidParam(f"bad signature token {token.strip()!r}") from None
    return parse_signature(g, pairs)


def vertex_cut(g: Graph, v: int) -> int:
    """Bit vector of the edges incident to v."""
    if not 0 <= v < g.n:
        raise InvalidVertex(f"vertex {v} outside 0..{g.n - 1}")
    mask = 0
    for w in g.neighbors[v]:
        mask |= 1 << g.edge_id(v, w)
    return mask


def cut_mask(g: Graph, vertices: Iterable[int]) -> int:
    """Bit vector of delta(S): edges with exactly one endpoint in S."""
    mask = 0
    for v in set(vertices):
        mask ^= vertex_cut(g, v)
    return mask


def switch(sig: Signature, s: Iterable[int]) -> Signature:
    """Switch at the vertex set s, flipping every edge with one endpoint in s.

    Switching is an involution, and switching at the complement of s within
    any component gives the same result.
    """
    return Signature(sig.graph, sig.bits ^ cut_mask(sig.graph, s))


@lru_cache(maxsize=None)
def cut_space_basis(g: Graph) -> Gf2Basis:
    """Reduced row-echelon basis of the span of the single-vertex cuts.

    The rank is n - c, so the quotient of all 2^m signatures by the cut
    space has 2^(m-n+c) cosets: the switching classes as labeled objects.
    """
    rows: list[tuple[int, int, int]] = []  # (vector, pivot, vertex-set mask)
    for v in range(g.n):
        vec = vertex_cut(g, v)
        vmask = 1 << v
        for rvec, rpiv, rvm in rows:
            if (vec >> rpiv) & 1:
                vec ^= rvec
                vmask ^= rvm
        if vec:
            rows.append((vec, (vec & -vec).bit_length() - 1, vmask))
    rows.sort(key=lambda r: r[1])
    # back substitution, highest pivot first, yields the reduced form
    for j in range(len(rows) - 1, -1, -1):
        vec_j, piv_j, vm_j = rows[j]
        for i in range(j):
            vec_i, piv_i, vm_i = rows[i]
            if (vec_i >> piv_j) & 1:
                rows[i] = (vec_i ^ vec_j, piv_i, vm_i ^ vm_j)
    return Gf2Basis(
        g,
        tuple(r[0] for r in rows),
        tuple(r[1] for r in rows),
        tuple(r[2] for r in rows),
    )


def reduce_bits(bits: int, basis: Gf2Basis) -> int:
    """Unique coset member with all pivot coordinates zero."""
    for vec, piv in zip(basis.rows, basis.pivots):
        if (bits >> piv) & 1:
            bits ^= vec
    return bits


def _reduce_with_switch_mask(bits: int, basis: Gf2Basis) -> tuple[int, int]:
    vmask = 0
    for vec, piv, vm in zip(basis.rows, basis.pivots, basis.row_switch_sets):
        if (bits >> piv) & 1:
            bits ^= vec
            vmask ^= vm
    return bits, vmask


def _normalise_switch_mask(g: Graph, vmask: int) -> int:
    # delta(S) is unchanged by complementing S within a component; keep the
    # smallest vertex of each component out of S
    for comp in g.components:
        if (vmask >> comp[0]) & 1:
            for x in comp:
                vmask ^= 1 << x
    return vmask


def coset_reduce(sig: Signature, basis: Gf2Basis | None = None) -> Signature:
    """Canonical representative of sig's switching class.

    Idempotent; two signatures reduce to the same vector exactly when they
    are switching equivalent.
    """
    if basis is None:
        basis = cut_space_basis(sig.graph)
    elif basis.graph != sig.graph:
        raise GraphMismatch("basis belongs to a different graph")
    return Signature(sig.graph, reduce_bits(sig.bits, basis))


def _require_same_graph(s1: Signature, s2: Signature) -> Graph:
    if s1.graph != s2.graph:
        raise GraphMismatch("signatures live on different graphs")
    return s1.graph


def is_switching_equivalent(s1: Signature, s2: Signature) -> bool:
    """True when s1 and s2 differ by a sequence of switchings."""
    g = _require_same_graph(s1, s2)
    return reduce_bits(s1.bits ^ s2.bits, cut_space_basis(g)) == 0


def switching_witness(s1: Signature, s2: Signature) -> frozenset[int] | None:
    """A vertex set S with switch(s1, S) == s2, or None when not equivalent.

    The witness is normalised so the smallest vertex of each component stays
    outside S, making output deterministic.
    """
    g = _require_same_graph(s1, s2)
    basis = cut_space_basis(g)
    residual, vmask = _reduce_with_switch_mask(s1.bits ^ s2.bits, basis)
    if residual:
        return None
    vmask = _normalise_switch_mask(g, vmask)
    return frozenset(_iter_bits(vmask))


def _check_cycle(g: Graph, cyc: Cycle) -> None:
    k = len(cyc.vertices)
    if len(cyc.edge_indices) != k:
        raise GraphMismatch("cycle edge list does not match its vertex list")
    for i in range(k):
        u, v = cyc.vertices[i], cyc.vertices[(i + 1) % k]
        if not (0 <= u < g.n) or not g.has_edge(u, v):
            raise GraphMismatch(f"cycle edge ({u},{v}) not in graph")
        if g.edge_id(u, v) != cyc.edge_indices[i]:
            raise GraphMismatch(f"cycle edge ({u},{v}) indexed differently in graph")


def cycle_sign(sig: Signature, cyc: Cycle) -> int:
    """Product of the edge signs along the cycle: -1 when the cycle carries
    an odd number of negative edges, +1 otherwise."""
    _check_cycle(sig.graph, cyc)
    return -1 if (sig.bits & cyc.edge_mask).bit_count() % 2 else 1


def is_balanced(sig: Signature) -> bool:
    """True when every cycle is positive, i.e. sig lies in the cut space."""
    return reduce_bits(sig.bits, cut_space_basis(sig.graph)) == 0


def negative_cycle_spectrum(sig: Signature, max_len: int | None = None) -> CycleSpectrum:
    """Counts of negative cycles per length 3..max_len.

    max_len defaults to min(n, 6), which is already enough to separate every
    class on the graphs this package targets.
    """
    g = sig.graph
    if max_len is None:
        if g.n < 3:
            return CycleSpectrum(())
        max_len = min(g.n, 6)
    elif not 3 <= max_len <= g.n:
        raise InvalidParam(f"max_len must be in 3..{g.n}, got {max_len}")
    counts = {k: 0 for k in range(3, max_len + 1)}
    for cyc in enumerate_cycles(g, max_len):
        if (sig.bits & cyc.edge_mask).bit_count() % 2:
            counts[len(cyc)] += 1
    return CycleSpectrum.from_dict(counts)


def unbalanced_cycle_set(sig: Signature) -> frozenset[Cycle]:
    """The exact set of negative cycles, all lengths up to n.

    Equality of these sets across two signatures on the same graph coincides
    with switching equivalence; the test suite exercises both directions.
    """
    g = sig.graph
    if g.n < 3:
        return frozenset()
    return frozenset(
        cyc
        for cyc in enumerate_cycles(g, g.n)
        if (sig.bits & cyc.edge_mask).bit_count() % 2
    )
