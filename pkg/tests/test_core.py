import itertools
from math import factorial, inf

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starcut import (
    CapacityError,
    InputError,
    StarGraph,
    build_star_graph,
    components,
    edge_boundary,
    format_perm,
    induced_edges,
    min_degree,
    neighborhood,
    parse_perm,
    perm_rank,
    perm_unrank,
    star_neighbors,
)
from helpers import components_by_union_find, neighbors_by_composition, rank_of, ranks_of


def test_star_neighbors_examples():
    assert {format_perm(q, compact=True) for q in star_neighbors(parse_perm("1234"))} \
        == {"2134", "3214", "4231"}
    assert [format_perm(q, compact=True) for q in star_neighbors(parse_perm("12"))] == ["21"]
    assert {format_perm(q, compact=True) for q in star_neighbors(parse_perm("3412"))} \
        == {"4312", "1432", "2413"}


def test_star_neighbors_order_is_by_swap_position():
    got = [format_perm(q, compact=True) for q in star_neighbors(parse_perm("1234"))]
    assert got == ["2134", "3214", "4231"]


def test_star_neighbors_matches_composition_oracle():
    for n in range(2, 6):
        for p in itertools.permutations(range(n)):
            assert star_neighbors(p) == neighbors_by_composition(p)


def test_perm_parse_and_format():
    assert parse_perm("3,4,1,2") == (2, 3, 0, 1)
    assert parse_perm("3412") == (2, 3, 0, 1)
    assert format_perm((2, 3, 0, 1)) == "3,4,1,2"
    assert format_perm((2, 3, 0, 1), compact=True) == "3412"
    with pytest.raises(InputError):
        parse_perm("1224")
    with pytest.raises(InputError):
        parse_perm("0123")
    with pytest.raises(InputError):
        parse_perm("abc")
    with pytest.raises(InputError):
        format_perm(tuple(range(10)), compact=True)


def test_rank_boundary_values():
    for n in range(1, 9):
        assert perm_rank(tuple(range(n))) == 0
        assert perm_rank(tuple(reversed(range(n)))) == factorial(n) - 1
    assert perm_unrank(perm_rank(parse_perm("2431")), 4) == parse_perm("2431")


def test_rank_unrank_bijective_exhaustive():
    # lexicographic enumeration order has to match the rank order, up to n = 8
    for n in range(1, 9):
        for r, p in enumerate(itertools.permutations(range(n))):
            assert perm_rank(p) == r
            assert perm_unrank(r, n) == p


def test_unrank_range_errors():
    with pytest.raises(InputError):
        perm_unrank(-1, 3)
    with pytest.raises(InputError):
        perm_unrank(6, 3)
    with pytest.raises(InputError):
        perm_unrank(0, 0)


def test_graph_counts_and_modes():
    g1 = build_star_graph(1)
    assert g1.num_vertices == 1 and g1.num_edges == 0
    g4 = StarGraph(4)
    assert (g4.num_vertices, g4.num_edges, g4.degree) == (24, 36, 3)
    assert StarGraph(9).mode == "materialized"
    assert StarGraph(10).mode == "implicit"
    with pytest.raises(CapacityError):
        StarGraph(13, mode="materialized")
    with pytest.raises(CapacityError):
        StarGraph(21)
    with pytest.raises(InputError):
        StarGraph(4, mode="compressed")
    with pytest.raises(InputError):
        StarGraph(0)


def test_s3_is_a_six_cycle(s3):
    assert s3.num_vertices == 6
    assert all(len(s3.neighbors(v)) == 2 for v in range(6))
    assert len(components(s3)) == 1


def test_implicit_and_materialized_agree():
    gm = StarGraph(5, mode="materialized")
    gi = StarGraph(5, mode="implicit")
    for v in range(gm.num_vertices):
        assert gm.neighbors(v) == gi.neighbors(v)


def test_neighbor_relation_symmetric_and_regular():
    for n in range(2, 9):
        g = StarGraph(n)
        rows = g.adjacency_lists()
        for v, nbrs in enumerate(rows):
            assert len(nbrs) == n - 1
            assert all(v in rows[w] for w in nbrs)


def test_edges_differ_in_first_and_one_other_position():
    for n in range(2, 8):
        g = StarGraph(n)
        for u, v in g.edges():
            pu, pv = g.perm(u), g.perm(v)
            diff = [i for i in range(n) if pu[i] != pv[i]]
            assert len(diff) == 2 and diff[0] == 0
            assert pu[0] == pv[diff[1]] and pu[diff[1]] == pv[0]


def test_has_edge(s4):
    assert s4.has_edge(rank_of("1234"), rank_of("2134"))
    assert not s4.has_edge(rank_of("1234"), rank_of("1243"))
    assert not s4.has_edge(rank_of("1234"), rank_of("1234"))


def test_components_whole_graph(s4):
    comps = components(s4)
    assert [len(c) for c in comps] == [24]


def test_components_antipodal_pair_on_cycle(s3):
    # opposite vertices of the 6-cycle leave two paths of two vertices
    cycle = [0]
    prev = None
    while len(cycle) < 6:
        nxt = [w for w in s3.neighbors(cycle[-1]) if w != prev]
        prev = cycle[-1]
        cycle.append(nxt[0])
    removed = [cycle[0], cycle[3]]
    comps = components(s3, removed_vertices=removed)
    assert sorted(len(c) for c in comps) == [2, 2]


def test_components_after_removing_constructed_cut(s4):
    t = ranks_of("1432", "1342", "2413", "2314")
    comps = components(s4, removed_vertices=t)
    sizes = sorted(len(c) for c in comps)
    assert sizes == [2, 18]
    small = next(c for c in comps if len(c) == 2)
    assert small == ranks_of("3412", "4312")


def test_components_with_removed_edges(s3):
    v = 0
    cut = [(v, w) for w in s3.neighbors(v)]
    comps = components(s3, removed_edges=cut)
    assert sorted(len(c) for c in comps) == [1, 5]


def test_min_degree(s4):
    assert min_degree(s4) == 3
    assert min_degree(s4, removed_vertices=range(24)) == inf
    v = 0
    assert min_degree(s4, removed_vertices=s4.neighbors(v)) == 0


def test_neighborhood_example(s4):
    x = ranks_of("3412", "4312")
    assert neighborhood(s4, x) == ranks_of("1432", "2413", "1342", "2314")


def test_edge_boundary_example(s4):
    x = ranks_of("3412", "4312")
    assert len(edge_boundary(s4, x)) == 4


def test_vertex_rank_validation(s4):
    with pytest.raises(InputError):
        components(s4, removed_vertices=[24])
    with pytest.raises(InputError):
        neighborhood(s4, [-1])


@st.composite
def graph_and_subset(draw, max_n=5):
    n = draw(st.integers(min_value=2, max_value=max_n))
    g = StarGraph(n)
    size = draw(st.integers(min_value=0, max_value=g.num_vertices))
    xs = draw(st.permutations(range(g.num_vertices)))[:size]
    return g, sorted(xs)


@settings(max_examples=60, deadline=None)
@given(graph_and_subset())
def test_edge_boundary_degree_identity(gx):
    g, xs = gx
    boundary = edge_boundary(g, xs)
    inner = induced_edges(g, xs)
    assert len(boundary) == len(xs) * g.degree - 2 * len(inner)


def test_edge_boundary_degree_identity_n6(s6):
    import random

    rng = random.Random(42)
    for _ in range(40):
        xs = rng.sample(range(s6.num_vertices), rng.randrange(1, 721))
        boundary = edge_boundary(s6, xs)
        inner = induced_edges(s6, xs)
        assert len(boundary) == len(xs) * s6.degree - 2 * len(inner)


@settings(max_examples=40, deadline=None)
@given(graph_and_subset(max_n=4))
def test_components_partition_survivors(gx):
    g, xs = gx
    comps = components(g, removed_vertices=xs)
    seen = [v for comp in comps for v in comp]
    assert sorted(seen) == sorted(set(range(g.num_vertices)) - set(xs))
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)


@settings(max_examples=30, deadline=None)
@given(graph_and_subset(max_n=4))
def test_components_match_union_find_oracle(gx):
    g, xs = gx
    edges = list(g.edges())
    assert components(g, removed_vertices=xs) == components_by_union_find(
        g.num_vertices, edges, removed_vertices=xs
    )


@settings(max_examples=40, deadline=None)
@given(graph_and_subset(max_n=4))
def test_neighborhood_disjoint_and_adjacent(gx):
    g, xs = gx
    hood = neighborhood(g, xs)
    xset = set(xs)
    assert not xset & set(hood)
    for v in hood:
        assert any(w in xset for w in g.neighbors(v))
