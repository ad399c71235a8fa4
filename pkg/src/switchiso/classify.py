"""Classification of signatures up to switching isomorphism.

Two signatures are switching isomorphic when some graph automorphism
followed by a switching carries one to the other. The canonical form of a
signature is the numerically smallest coset-reduced image over the whole
automorphism group, so equality of canonical forms decides the relation
and sorting by canonical form orders the classes reproducibly.

Everything here runs on explicit orbit scans, guarded to sizes where that
is exact and fast: 2^(m-n+c) coset representatives times the group order
for a full enumeration, and 2^(n-c) switchings for a frustration scan.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import GraphMismatch, InvalidParam, NotAutomorphism, TooLarge
from .graphs import (
    Automorphism,
    Graph,
    PermutationGroup,
    _edge_action,
    automorphism_group,
)
from .kernels import make_scanner
from .signatures import (
    CycleSpectrum,
    Gf2Basis,
    Signature,
    _iter_bits,
    _require_same_graph,
    cut_space_basis,
    negative_cycle_spectrum,
    reduce_bits,
    switching_witness,
    vertex_cut,
)

COSET_RANK_LIMIT = 24
SWITCH_SCAN_LIMIT = 24
GROUP_ORDER_LIMIT = 100_000
TYPE_SCAN_LIMIT = 1 << 22


@dataclass(frozen=True)
class CanonicalKey:
    """Smallest coset-reduced image of a signature over the automorphism
    group; equal keys mean switching isomorphic."""

    graph: Graph
    bits: int

    def signature(self) -> Signature:
        return Signature(self.graph, self.bits)

    def __str__(self) -> str:
        return str(self.signature())

    def __lt__(self, other: "CanonicalKey") -> bool:
        if self.graph != other.graph:
            raise GraphMismatch("keys belong to different graphs")
        return self.bits < other.bits


@dataclass(frozen=True)
class IsoWitness:
    """Certificate that switch(perm(source), switch_set) equals target."""

    source: Signature
    target: Signature
    perm: Automorphism
    switch_set: frozenset[int]

    def holds(self) -> bool:
        from .signatures import switch

        mapped = apply_automorphism(self.source, self.perm)
        return switch(mapped, self.switch_set) == self.target


@dataclass(frozen=True)
class ClassReport:
    """One switching-isomorphism class.

    class_size counts labeled signatures in the class; min_rep is the
    deterministic frustration minimiser of the canonical representative,
    so its size equals the frustration index.
    """

    canonical: CanonicalKey
    class_size: int
    spectrum: CycleSpectrum
    frustration: int
    min_rep: Signature


@dataclass(frozen=True)
class _Context:
    graph: Graph
    group: PermutationGroup
    basis: Gf2Basis
    scanner: object


@lru_cache(maxsize=None)
def _context(g: Graph) -> _Context:
    group = automorphism_group(g)
    basis = cut_space_basis(g)
    scanner = make_scanner(
        tuple(a.edges for a in group.elements), basis.pivots, basis.rows, g.m
    )
    return _Context(g, group, basis, scanner)


def automorphism_from_images(g: Graph, images: Sequence[int]) -> Automorphism:
    """Automorphism of g with vertex v mapped to images[v].

    Raises NotAutomorphism when images is not a permutation of 0..n-1 or
    fails to preserve adjacency.
    """
    imgs = tuple(images)
    if len(imgs) != g.n or sorted(imgs) != list(range(g.n)):
        raise NotAutomorphism(f"{imgs} is not a permutation of 0..{g.n - 1}")
    try:
        action = _edge_action(g, imgs)
    except KeyError:
        raise NotAutomorphism(f"{imgs} does not preserve adjacency") from None
    return Automorphism(imgs, action)


def apply_automorphism(sig: Signature, perm) -> Signature:
    """Relabel a signature along a vertex permutation.

    perm may be an Automorphism or a plain image sequence; it is validated
    against sig's graph either way.
    """
    g = sig.graph
    images = perm.vertices if isinstance(perm, Automorphism) else perm
    a = automorphism_from_images(g, images)
    bits = 0
    for e in _iter_bits(sig.bits):
        bits |= 1 << a.edges[e]
    return Signature(g, bits)


def canonical_form(sig: Signature) -> CanonicalKey:
    """Canonical form of sig's switching-isomorphism class.

    Idempotent, and constant across the class: the key's own signature is
    a member of the class and maps back to the same key.
    """
    ctx = _context(sig.graph)
    return CanonicalKey(sig.graph, ctx.scanner.canonical_key(sig.bits))


def is_switching_isomorphic(s1: Signature, s2: Signature) -> IsoWitness | None:
    """Search the automorphism group for a witness carrying s1 to s2.

    Returns the first witness in group order, or None. The identity comes
    first, so equivalent signatures get a pure-switching witness.
    """
    g = _require_same_graph(s1, s2)
    ctx = _context(g)
    for a in ctx.group:
        mapped = 0
        for e in _iter_bits(s1.bits):
            mapped |= 1 << a.edges[e]
        if reduce_bits(mapped ^ s2.bits, ctx.basis) == 0:
            switch_set = switching_witness(Signature(g, mapped), s2)
            assert switch_set is not None
            return IsoWitness(s1, s2, a, switch_set)
    return None


def _coset_rep_masks(g: Graph) -> list[int]:
    # the reduced vectors are exactly the masks over non-pivot positions,
    # and counter order equals numeric order because deposit is monotone
    basis = cut_space_basis(g)
    pivots = set(basis.pivots)
    free = [e for e in range(g.m) if e not in pivots]
    masks = []
    for counter in range(1 << len(free)):
        mask = 0
        rem = counter
        i = 0
        while rem:
            if rem & 1:
                mask |= 1 << free[i]
            rem >>= 1
            i += 1
        masks.append(mask)
    return masks


def enumerate_switching_classes(g: Graph) -> tuple[Signature, ...]:
    """One canonical representative per switching class, ascending by bit
    vector. There are exactly 2^(m-n+c) of them."""
    basis = cut_space_basis(g)
    if g.m - basis.rank > COSET_RANK_LIMIT:
        raise TooLarge(
            f"cycle rank {g.m - basis.rank} exceeds the scan limit {COSET_RANK_LIMIT}"
        )
    return tuple(Signature(g, b) for b in _coset_rep_masks(g))


def _keys_for_chunk(args: tuple[int, tuple, list[int]]) -> list[int]:
    n, edges, chunk = args
    return _context(Graph(n, edges)).scanner.canonical_keys(chunk)


def _canonical_keys(g: Graph, masks: list[int], workers: int) -> list[int]:
    if workers < 1:
        raise InvalidParam(f"workers must be positive, got {workers}")
    if workers == 1 or len(masks) < 4 * workers:
        return _context(g).scanner.canonical_keys(masks)
    step = -(-len(masks) // workers)
    chunks = [masks[i : i + step] for i in range(0, len(masks), step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_keys_for_chunk, [(g.n, g.edges, ch) for ch in chunks])
        return [k for part in parts for k in part]


def enumerate_isomorphism_classes(
    g: Graph, max_cycle_len: int | None = None, workers: int = 1
) -> tuple[ClassReport, ...]:
    """All switching-isomorphism classes of g, sorted by canonical form.

    Scans every coset representative, groups them by canonical key, and
    reports one line per class. Class sizes always add up to 2^m.
    """
    ctx = _context(g)
    if g.m - ctx.basis.rank > COSET_RANK_LIMIT:
        raise TooLarge(
            f"cycle rank {g.m - ctx.basis.rank} exceeds the scan limit {COSET_RANK_LIMIT}"
        )
    if ctx.group.order > GROUP_ORDER_LIMIT:
        raise TooLarge(
            f"group order {ctx.group.order} exceeds the scan limit {GROUP_ORDER_LIMIT}"
        )
    members: dict[int, int] = {}
    for key in _canonical_keys(g, _coset_rep_masks(g), workers):
        members[key] = members.get(key, 0) + 1
    reports = []
    for key in sorted(members):
        rep = Signature(g, key)
        frustration, min_rep = frustration_index(rep)
        reports.append(
            ClassReport(
                canonical=CanonicalKey(g, key),
                class_size=members[key] << ctx.basis.rank,
                spectrum=negative_cycle_spectrum(rep, max_cycle_len),
                frustration=frustration,
                min_rep=min_rep,
            )
        )
    return tuple(reports)


def frustration_index(sig: Signature) -> tuple[int, Signature]:
    """Smallest number of negative edges over the switching class, with the
    minimiser that has the numerically smallest bit vector.

    Walks all 2^(n-c) switchings in Gray-code order, flipping one vertex
    cut per step; the tie-break makes the result independent of the order.
    """
    g = sig.graph
    k = g.n - g.c
    if k > SWITCH_SCAN_LIMIT:
        raise TooLarge(f"switch scan needs n - c <= {SWITCH_SCAN_LIMIT}, got {k}")
    cuts = [vertex_cut(g, v) for comp in g.components for v in comp[1:]]
    cur = sig.bits
    best = (cur.bit_count(), cur)
    prev = 0
    for i in range(1, 1 << k):
        gray = i ^ (i >> 1)
        cur ^= cuts[(gray ^ prev).bit_length() - 1]
        prev = gray
        cand = (cur.bit_count(), cur)
        if cand < best:
            best = cand
    return best[0], Signature(g, best[1])


def _negative_max_degree(sig: Signature) -> int:
    deg = [0] * sig.graph.n
    for u, v in sig.negative_edges:
        deg[u] += 1
        deg[v] += 1
    return max(deg, default=0)


def check_min_degree_bound(g: Graph) -> bool:
    """Verify that on the complete graph every class has a representative
    whose negative part has maximum degree at most floor((n-1)/2).

    The minimum-size representative always qualifies: a vertex of larger
    negative degree would let one more switching shrink the negative set.
    """
    if not g.is_complete():
        raise InvalidParam("the degree bound is about complete graphs")
    bound = (g.n - 1) // 2
    return all(
        _negative_max_degree(r.min_rep) <= bound
        for r in enumerate_isomorphism_classes(g)
    )


def automorphic_type_count(g: Graph, size: int, max_deg: int | None = None) -> int:
    """Number of automorphism orbits of edge subsets of the given size,
    optionally restricted to subsets of bounded maximum degree.

    Orbits are counted by mapping each subset to its orbit minimum; the
    degree filter commutes with relabeling, so filtering first is sound.
    """
    if size < 0 or size > g.m:
        return 0
    if math.comb(g.m, size) > TYPE_SCAN_LIMIT:
        raise TooLarge(f"too many {size}-subsets of {g.m} edges to scan")
    ctx = _context(g)
    if ctx.group.order > GROUP_ORDER_LIMIT:
        raise TooLarge(
            f"group order {ctx.group.order} exceeds the scan limit {GROUP_ORDER_LIMIT}"
        )
    minima: set[int] = set()
    for combo in combinations(range(g.m), size):
        if max_deg is not None:
            deg = [0] * g.n
            ok = True
            for e in combo:
                u, v = g.edges[e]
                deg[u] += 1
                deg[v] += 1
                if deg[u] > max_deg or deg[v] > max_deg:
                    ok = False
                    break
            if not ok:
                continue
        bits = 0
        for e in combo:
            bits |= 1 << e
        if bits not in minima:
            minima.add(ctx.scanner.orbit_min(bits))
    return len(minima)
