import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resdom.errors import ParameterError, ParseError, SizeGuardError
from resdom.graph import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    bull,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    from_edge_list,
    generate_basic,
    is_connected,
    is_isomorphic,
    join,
    metrics,
    path,
    star,
    substitute,
    to_edge_list,
    twin_classes,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_edges_are_normalized():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.sorted_edges() == [(0, 2), (1, 2)]
    assert g.degrees == (1, 1, 2)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(ParameterError):
        Graph.from_edges(3, edges)


def test_edge_list_round_trip_p4():
    text = "4 3\n0 1\n1 2\n2 3\n"
    g = from_edge_list(text)
    assert g == path(4)
    assert to_edge_list(g) == text


def test_edge_list_comments_and_missing_trailing_newline():
    g = from_edge_list("# header comment\n3 2\n# edge\n0 1\n1 2")
    assert g == path(3)


@pytest.mark.parametrize("text, line", [
    ("3 2\n0 1\n0 1\n", 3),
    ("3 2\n0 1\n", 3),
    ("3 1\n0 1\n1 2\n", 3),
    ("3 1\n0 5\n", 2),
    ("3 1\n1 1\n", 2),
    ("3 1\n0  1\n", 2),
    ("3 x\n", 1),
    ("", 1),
])
def test_edge_list_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        from_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


@given(graphs())
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


@given(graphs())
def test_distance_matrix_is_a_metric(g):
    dm = all_pairs_distances(g)
    assert (dm == dm.T).all()
    assert (np.diag(dm) == 0).all()
    inf = np.where(dm == UNREACHABLE, 10**6, dm)
    for w in range(g.n):
        assert (inf <= inf[:, [w]] + inf[[w], :]).all()


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(graphs(max_n=5), graphs(max_n=5))
def test_join_edge_count(g1, g2):
    assert join(g1, g2).m == g1.m + g2.m + g1.n * g2.n
    assert disjoint_union(g1, g2).m == g1.m + g2.m


def test_metrics_of_named_graphs():
    assert metrics(cycle(7)).girth == 7
    assert metrics(path(5)).girth == float("inf")
    assert metrics(star(6)).girth == float("inf")
    m = metrics(path(5))
    assert (m.diameter, m.radius, m.connected) == (4, 2, True)
    assert metrics(complete_bipartite(2, 3)).girth == 4
    d = metrics(empty(3))
    assert not d.connected and d.diameter is None and d.radius is None


def test_disconnected_distances_are_marked():
    dm = all_pairs_distances(disjoint_union(path(2), path(2)))
    assert dm[0, 2] == UNREACHABLE and dm[0, 1] == 1
    assert not is_connected(empty(2))
    assert is_connected(complete(1))


def test_named_graphs():
    assert complete(5).m == 10 and cycle(5).m == 5 and empty(4).m == 0
    assert complete_bipartite(2, 3).m == 6
    assert star(5).degrees == (4, 1, 1, 1, 1)
    assert generate_basic("complete-bipartite", s=1, t=3) == complete_bipartite(1, 3)
    with pytest.raises(ParameterError):
        generate_basic("petersen")


def test_self_complementary_graphs():
    assert is_isomorphic(path(4), complement(path(4)))
    assert is_isomorphic(bull(), complement(bull()))
    assert is_isomorphic(cycle(5), complement(cycle(5)))
    assert not is_isomorphic(cycle(5), path(5))


def test_isomorphism_size_guard():
    with pytest.raises(SizeGuardError):
        is_isomorphic(path(9), path(9))


@settings(max_examples=60)
@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_isomorphism_is_relabeling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert is_isomorphic(g, h) and is_isomorphic(h, g)
    assert is_isomorphic(g, g)


def test_isomorphism_transitivity_spot_check():
    corpus = [path(4), complement(path(4)), star(4), complete_bipartite(1, 3), cycle(4),
              complete_bipartite(2, 2)]
    for a, b, c in itertools.product(corpus, repeat=3):
        if is_isomorphic(a, b) and is_isomorphic(b, c):
            assert is_isomorphic(a, c)


def test_substitution_blocks():
    # P4[K_2 at vertex 0]: triangle {0,1,2} with the path continuing 2-3-4
    g = substitute(path(4), {0: complete(2)})
    assert g.sorted_edges() == [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]
    h = substitute(path(4), {1: empty(2), 3: empty(2)})
    assert h.n == 6 and h.m == 6


def test_twin_classes():
    assert twin_classes(complete(4)) == [(0, 1, 2, 3)]
    assert twin_classes(path(4)) == [(0,), (1,), (2,), (3,)]
    assert sorted(twin_classes(complete_bipartite(2, 3))) == [(0, 1), (2, 3, 4)]
