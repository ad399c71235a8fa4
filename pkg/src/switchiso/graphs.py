"""Immutable simple graphs with a fixed edge indexing.

Vertices are 0..n-1. The edge list is sorted lexicographically as (u, v)
with u < v, and every bit vector in the package indexes edges by position
in that sorted list, so results are reproducible across runs. The module
also provides builtin constructors, simple-cycle enumeration, explicit
automorphism groups for small graphs, and a deterministic spanning forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    InvalidEdge,
    InvalidParam,
    NotAnEdge,
    TooLarge,
    UnknownGraph,
)

AUTOMORPHISM_VERTEX_LIMIT = 14

BUILTIN_NAMES = ("complete", "cycle", "path", "petersen", "heawood")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices 0..n-1 and a frozen edge order."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidEdge(f"loop edge ({u},{v})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidEdge(f"edge ({u},{v}) outside 0..{self.n - 1}")
            if u > v:
                raise InvalidEdge(f"edge ({u},{v}) not normalised as u < v")
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u},{v}) repeated")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise InvalidEdge("edge list not sorted lexicographically")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self.neighbors[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def c(self) -> int:
        return len(self.components)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge (u, v) in the frozen edge order."""
        if u > v:
            u, v = v, u
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise NotAnEdge(f"({u},{v}) is not an edge") from None

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    @cached_property
    def _cycle_cache(self) -> dict[int, tuple["Cycle", ...]]:
        return {}


@dataclass(frozen=True)
class Cycle:
    """Simple cycle in canonical orientation.

    The first vertex is the smallest on the cycle and its successor is
    smaller than its predecessor, so each cycle has exactly one canonical
    form under rotation and reflection.
    """

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def edge_mask(self) -> int:
        mask = 0
        for e in self.edge_indices:
            mask |= 1 << e
        return mask


@dataclass(frozen=True)
class Automorphism:
    """Vertex permutation together with its induced action on edge indices."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def apply_vertex(self, v: int) -> int:
        return self.vertices[v]

    def apply_edge(self, e: int) -> int:
        return self.edges[e]


@dataclass(frozen=True)
class PermutationGroup:
    """Full automorphism group of a graph as an explicit element list."""

    n: int
    elements: tuple[Automorphism, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Automorphism:
        return self.elements[0]


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph from unordered vertex pairs, normalising edge order.

    Raises InvalidEdge for loops or out-of-range vertices and DuplicateEdge
    when the same unordered pair appears twice.
    """
    if n < 0:
        raise InvalidParam(f"vertex count must be nonnegative, got {n}")
    normalised = []
    for pair in edge_pairs:
        u, v = pair
        if u > v:
            u, v = v, u
        normalised.append((u, v))
    return Graph(n, tuple(sorted(normalised)))


def builtin_graph(name: str, param: int | None = None) -> Graph:
    """Construct a builtin graph under its fixed vertex labeling.

    complete:n and cycle:n and path:n take a size parameter; petersen and
    heawood take none. Labelings are documented in the README.
    """
    if name not in BUILTIN_NAMES:
        raise UnknownGraph(f"unknown builtin graph {name!r}")
    if name in ("complete", "cycle", "path"):
        if param is None:
            raise InvalidParam(f"{name} requires a size parameter")
        if name == "complete":
            if param < 1:
                raise InvalidParam("complete graph needs n >= 1")
            return build_graph(param, combinations(range(param), 2))
        if name == "cycle":
            if param < 3:
                raise InvalidParam("cycle graph needs n >= 3")
            return build_graph(param, [(i, (i + 1) % param) for i in range(param)])
        if param < 1:
            raise InvalidParam("path graph needs n >= 1")
        return build_graph(param, [(i, i + 1) for i in range(param - 1)])
    if param is not None:
        raise InvalidParam(f"{name} takes no size parameter")
    if name == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        return build_graph(10, edges)
    # heawood: 14-cycle plus chords (i, i+5 mod 14) at even i
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return build_graph(14, edges)


def parse_graph_text(text: str) -> Graph:
    """Parse the graph text format: `n <count>` then `e <u> <v>` lines.

    Everything after a `#` on a line is ignored, as are blank lines.
    """
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "n":
            if n is not None:
                raise InvalidParam(f"line {lineno}: repeated n line")
            if len(fields) != 2:
                raise InvalidParam(f"line {lineno}: expected 'n <count>'")
            n = _parse_int(fields[1], lineno)
        elif fields[0] == "e":
            if n is None:
                raise InvalidParam(f"line {lineno}: edge before n line")
            if len(fields) != 3:
                raise InvalidParam(f"line {lineno}: expected 'e <u> <v>'")
            pairs.append((_parse_int(fields[1], lineno), _parse_int(fields[2], lineno)))
        else:
            raise InvalidParam(f"line {lineno}: unknown directive {fields[0]!r}")
    if n is None:
        raise InvalidParam("missing 'n <count>' line")
    return build_graph(n, pairs)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InvalidParam(f"line {lineno}: not an integer: {token!r}") from None


def load_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def enumerate_cycles(g: Graph, max_len: int) -> tuple[Cycle, ...]:
    """All simple cycles of length 3..max_len, each exactly once.

    Cycles appear in canonical orientation and the list is ordered
    lexicographically by vertex sequence. Results are cached on the graph.
    """
    if max_len < 3:
        raise InvalidParam(f"max_len must be at least 3, got {max_len}")
    if max_len > g.n:
        raise InvalidParam(f"max_len {max_len} exceeds vertex count {g.n}")
    cache = g._cycle_cache
    for bound in sorted(cache):
        if bound >= max_len:
            return tuple(c for c in cache[bound] if len(c) <= max_len)
    if g.is_complete():
        cycles = _cycles_complete(g, max_len)
    else:
        cycles = _cycles_dfs(g, max_len)
    cycles.sort(key=lambda c: c.vertices)
    cache[max_len] = tuple(cycles)
    return cache[max_len]


def _make_cycle(g: Graph, verts: tuple[int, ...]) -> Cycle:
    k = len(verts)
    eids = tuple(g.edge_id(verts[i], verts[(i + 1) % k]) for i in range(k))
    return Cycle(verts, eids)


def _cycles_complete(g: Graph, max_len: int) -> list[Cycle]:
    # every k-subset carries (k-1)!/2 distinct cycles
    out = []
    for k in range(3, max_len + 1):
        for sub in combinations(range(g.n), k):
            first = sub[0]
            for rest in permutations(sub[1:]):
                if rest[0] < rest[-1]:
                    out.append(_make_cycle(g, (first,) + rest))
    return out


def _cycles_dfs(g: Graph, max_len: int) -> list[Cycle]:
    # rooted DFS; the root is the smallest vertex of the cycle, and the
    # direction filter path[1] < path[-1] keeps one orientation
    out = []
    nbrs = g.neighbors
    on_path = [False] * g.n
    path: list[int] = []

    def extend(root: int) -> None:
        last = path[-1]
        for w in nbrs[last]:
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                out.append(_make_cycle(g, tuple(path)))
            elif w > root and not on_path[w] and len(path) < max_len:
                path.append(w)
                on_path[w] = True
                extend(root)
                path.pop()
                on_path[w] = False

    for root in range(g.n):
        path[:] = [root]
        on_path[root] = True
        extend(root)
        on_path[root] = False
    return out


@lru_cache(maxsize=None)
def automorphism_group(g: Graph) -> PermutationGroup:
    """Compute the full automorphism group by backtracking on vertex images.

    Elements are listed in lexicographic order of their vertex image tuples,
    so the identity always comes first. Guarded to n <= 14; the explicit
    element list is what makes orbit code elsewhere straightforward.
    """
    if g.n > AUTOMORPHISM_VERTEX_LIMIT:
        raise TooLarge(
            f"automorphism search supports n <= {AUTOMORPHISM_VERTEX_LIMIT}, got {g.n}"
        )
    n = g.n
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = True
    deg = [g.degree(v) for v in range(n)]
    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def backtrack(d: int) -> None:
        if d == n:
            found.append(tuple(image))
            return
        row = adj[d]
        for w in range(n):
            if used[w] or deg[w] != deg[d]:
                continue
            ok = True
            for j in range(d):
                if row[j] != adj[w][image[j]]:
                    ok = False
                    break
            if ok:
                image[d] = w
                used[w] = True
                backtrack(d + 1)
                used[w] = False
        image[d] = -1

    backtrack(0)
    elements = tuple(
        Automorphism(p, _edge_action(g, p)) for p in found
    )
    return PermutationGroup(n, elements)


def _edge_action(g: Graph, p: tuple[int, ...]) -> tuple[int, ...]:
    idx = g.edge_index
    out = []
    for u, v in g.edges:
        pu, pv = p[u], p[v]
        if pu > pv:
            pu, pv = pv, pu
        out.append(idx[(pu, pv)])
    return tuple(out)


def spanning_forest(g: Graph) -> frozenset[int]:
    """Edge indices of a spanning forest, breadth-first from the smallest
    vertex of each component. Always n - c edges."""
    from collections import deque

    chosen: set[int] = set()
    seen = [False] * g.n
    for comp in g.components:
        root = comp[0]
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                if not seen[y]:
                    seen[y] = True
                    chosen.add(g.edge_id(x, y))
                    queue.append(y)
    return frozenset(chosen)
