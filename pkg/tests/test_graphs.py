import math

import pytest

from switchiso.errors import (
    DuplicateEdge,
    InvalidEdge,
    InvalidParam,
    NotAnEdge,
    TooLarge,
    UnknownGraph,
)
from switchiso.graphs import (
    Graph,
    automorphism_group,
    build_graph,
    builtin_graph,
    enumerate_cycles,
    parse_graph_text,
    spanning_forest,
)

from oracles import automorphisms_by_filter, cycle_counts


def test_build_graph_normalises_and_sorts():
    g = build_graph(4, [(3, 2), (0, 1), (1, 3)])
    assert g.edges == ((0, 1), (1, 3), (2, 3))
    assert g.m == 3
    assert g.edge_index[(1, 3)] == 1


def test_build_graph_rejects_loops_range_and_duplicates():
    with pytest.raises(InvalidEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(0, 3)])
    with pytest.raises(DuplicateEdge):
        build_graph(3, [(0, 1), (1, 0)])


def test_graph_type_rejects_unsorted_edge_list():
    with pytest.raises(InvalidEdge):
        Graph(3, ((1, 2), (0, 1)))


def test_components_and_degrees():
    g = build_graph(5, [(0, 1), (2, 3)])
    assert g.c == 3
    assert g.components == ((0, 1), (2, 3), (4,))
    assert g.degree(4) == 0
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    with pytest.raises(NotAnEdge):
        g.edge_id(0, 2)


def test_builtin_complete_and_cycle_and_path():
    k6 = builtin_graph("complete", 6)
    assert (k6.n, k6.m, k6.c) == (6, 15, 1)
    assert k6.is_complete()
    c5 = builtin_graph("cycle", 5)
    assert (c5.n, c5.m) == (5, 5)
    assert all(c5.degree(v) == 2 for v in range(5))
    p4 = builtin_graph("path", 4)
    assert (p4.n, p4.m) == (4, 3)
    assert builtin_graph("cycle", 3).edges == builtin_graph("complete", 3).edges


def test_builtin_petersen_shape():
    g = builtin_graph("petersen")
    assert (g.n, g.m) == (10, 15)
    assert all(g.degree(v) == 3 for v in range(10))
    cycles = enumerate_cycles(g, 5)
    assert sum(1 for c in cycles if len(c) < 5) == 0
    assert sum(1 for c in cycles if len(c) == 5) == 12


def test_builtin_heawood_shape():
    g = builtin_graph("heawood")
    assert (g.n, g.m) == (14, 21)
    assert all(g.degree(v) == 3 for v in range(14))
    # girth 6
    assert all(len(c) == 6 for c in enumerate_cycles(g, 6))
    assert automorphism_group(g).order == 336


def test_builtin_errors():
    with pytest.raises(UnknownGraph):
        builtin_graph("tetrahedron")
    with pytest.raises(InvalidParam):
        builtin_graph("complete")
    with pytest.raises(InvalidParam):
        builtin_graph("cycle", 2)
    with pytest.raises(InvalidParam):
        builtin_graph("complete", 0)
    with pytest.raises(InvalidParam):
        builtin_graph("petersen", 5)


def test_parse_graph_text_round_trip():
    text = """
    # a square with a comment
    n 4
    e 0 1
    e 1 2
    e 2 3
    e 0 3  # closing edge
    """
    g = parse_graph_text(text)
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))


@pytest.mark.parametrize(
    "text",
    ["", "e 0 1", "n 3\nn 4", "n 3\ne 0", "n x", "n 3\nv 0 1", "n 3\ne 0 one"],
)
def test_parse_graph_text_errors(text):
    with pytest.raises(InvalidParam):
        parse_graph_text(text)


def test_cycle_counts_match_brute_force():
    for g in (
        builtin_graph("complete", 5),
        builtin_graph("petersen"),
        builtin_graph("path", 4),
        build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4)]),
    ):
        got = {}
        for cyc in enumerate_cycles(g, min(g.n, 6)):
            got[len(cyc)] = got.get(len(cyc), 0) + 1
        want = cycle_counts(g, min(g.n, 6))
        assert got == {k: v for k, v in want.items() if v}


def test_cycle_counts_complete_graph_formula():
    g = builtin_graph("complete", 6)
    by_len = {}
    for cyc in enumerate_cycles(g, 6):
        by_len[len(cyc)] = by_len.get(len(cyc), 0) + 1
    for k in range(3, 7):
        assert by_len[k] == math.comb(6, k) * math.factorial(k - 1) // 2


def test_cycles_are_canonical_and_sorted():
    g = builtin_graph("petersen")
    cycles = enumerate_cycles(g, 6)
    assert list(cycles) == sorted(cycles, key=lambda c: c.vertices)
    for cyc in cycles:
        assert cyc.vertices[0] == min(cyc.vertices)
        assert cyc.vertices[1] < cyc.vertices[-1]
        assert len(set(cyc.vertices)) == len(cyc.vertices)
        k = len(cyc)
        for i in range(k):
            u, v = cyc.vertices[i], cyc.vertices[(i + 1) % k]
            assert g.edge_id(u, v) == cyc.edge_indices[i]


def test_cycle_enumeration_cache_is_consistent():
    g = builtin_graph("complete", 5)
    full = enumerate_cycles(g, 5)
    short = enumerate_cycles(g, 3)
    assert short == tuple(c for c in full if len(c) == 3)


def test_cycle_enumeration_bounds():
    g = builtin_graph("complete", 4)
    with pytest.raises(InvalidParam):
        enumerate_cycles(g, 2)
    with pytest.raises(InvalidParam):
        enumerate_cycles(g, 5)


def test_automorphism_groups_match_brute_filter():
    for g in (
        builtin_graph("complete", 4),
        builtin_graph("cycle", 5),
        builtin_graph("path", 4),
        build_graph(5, [(0, 1), (1, 2), (0, 2), (3, 4)]),
    ):
        want = set(automorphisms_by_filter(g))
        group = automorphism_group(g)
        assert {a.vertices for a in group} == want
        assert group.order == len(want)


def test_automorphism_group_orders():
    assert automorphism_group(builtin_graph("complete", 6)).order == 720
    assert automorphism_group(builtin_graph("petersen")).order == 120
    assert automorphism_group(builtin_graph("path", 3)).order == 2
    for n in range(3, 7):
        order = automorphism_group(builtin_graph("complete", n)).order
        assert order == math.factorial(n)


def test_automorphism_identity_first_and_edge_action():
    g = builtin_graph("petersen")
    group = automorphism_group(g)
    assert group.identity.vertices == tuple(range(10))
    assert group.identity.edges == tuple(range(15))
    for a in group.elements[:20]:
        for e, (u, v) in enumerate(g.edges):
            assert g.edge_id(a.vertices[u], a.vertices[v]) == a.edges[e]


def test_automorphism_group_guard():
    with pytest.raises(TooLarge):
        automorphism_group(builtin_graph("path", 15))


def test_spanning_forest_properties():
    for g in (
        builtin_graph("complete", 6),
        builtin_graph("petersen"),
        build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4)]),
    ):
        forest = spanning_forest(g)
        assert len(forest) == g.n - g.c
        # acyclic: union-find over forest edges never joins joined parts
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in sorted(forest):
            u, v = g.edges[e]
            ru, rv = find(u), find(v)
            assert ru != rv
            parent[rv] = ru
        # spanning: adding any other edge closes a cycle within a component
        for e in range(g.m):
            if e not in forest:
                u, v = g.edges[e]
                assert find(u) == find(v)
