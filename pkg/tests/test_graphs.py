"""Graph container, parsing, structure queries, and tree enumeration.

The enumeration is checked against two independent oracles: networkx's
free-tree generator (a different algorithm entirely) and a brute-force
Prufer-sequence sweep over all labeled trees.
"""

import heapq
import itertools
import random

import networkx as nx
import pytest

from meansombor.graphs import (
    Graph,
    GraphParseError,
    RegularityTag,
    canonical_form,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    default_corpus,
    degree_extremes,
    disjoint_union,
    enumerate_octane_skeletons,
    enumerate_trees,
    is_connected,
    parse_graph,
    path_graph,
    random_connected_graphs,
    regularity_class,
    star_graph,
    to_edge_list_text,
)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def test_parse_p3():
    g = parse_graph("3\n0 1\n1 2")
    assert g.vertex_count == 3
    assert g.degrees == (1, 2, 1)


def test_parse_triangle():
    g = parse_graph("3\n0 1\n1 2\n0 2")
    assert g.degrees == (2, 2, 2)


def test_parse_comments_and_blanks():
    g = parse_graph("# a path\n\n3\n# edge one\n0 1\n\n1 2\n")
    assert g.degrees == (1, 2, 1)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("2\n0 0", "self-loop"),
        ("3\n0 1\n1 0", "duplicate edge"),
        ("2\n0 5", "out of range"),
        ("2\n0 x", "integers"),
        ("", "vertex count"),
        ("3\n0 1 2", "expected 'u v'"),
    ],
)
def test_parse_errors_name_line(text, fragment):
    with pytest.raises(GraphParseError) as err:
        parse_graph(text)
    assert "line" in str(err.value)
    assert fragment in str(err.value)


def test_parse_error_line_number_is_physical():
    with pytest.raises(GraphParseError, match="line 4"):
        parse_graph("# header\n3\n0 1\n1 1")


def test_round_trip_serialization():
    for _, g, _ in default_corpus()[:20]:
        again = parse_graph(to_edge_list_text(g))
        assert again.edges == g.edges and again.vertex_count == g.vertex_count


# ---------------------------------------------------------------------------
# structure queries
# ---------------------------------------------------------------------------

def test_degree_extremes(k3, k13, p3):
    assert degree_extremes(k3) == (2, 2)
    assert degree_extremes(k13) == (1, 3)
    assert degree_extremes(p3) == (1, 2)


def test_degree_sum_is_twice_edges():
    for named in random_connected_graphs(50, seed=5):
        g = named.graph
        assert sum(g.degrees) == 2 * g.edge_count
    g = Graph.from_edges(6, [(0, 1), (2, 3)])
    assert sum(g.degrees) == 4


def test_regularity_examples(k3, k13, p4):
    assert regularity_class(k3).tag is RegularityTag.REGULAR
    assert regularity_class(k3).degrees == (2,)
    assert regularity_class(k13).tag is RegularityTag.BIREGULAR
    assert regularity_class(k13).degrees == (1, 3)
    # P4 has two degree values but the middle edge joins two degree-2
    # vertices, so it is not biregular: check against the definition by
    # an exhaustive edge scan
    degs = p4.degrees
    two_values = len(set(degs)) == 2
    a, b = sorted(set(degs))
    all_cross = all({degs[u], degs[v]} == {a, b} for u, v in p4.edges)
    assert two_values and not all_cross
    assert regularity_class(p4).tag is RegularityTag.NEITHER


def test_regularity_complete_bipartite_family():
    for a in range(1, 6):
        for b in range(a, 6):
            tag = regularity_class(complete_bipartite(a, b)).tag
            if a == b:
                assert tag is RegularityTag.REGULAR
            else:
                assert tag is RegularityTag.BIREGULAR


def test_regularity_empty_edge_set():
    rc = regularity_class(Graph(3, frozenset()))
    assert rc.tag is RegularityTag.NEITHER and rc.degrees == ()


def test_is_connected(p3):
    assert is_connected(p3)
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, frozenset()))
    assert not is_connected(disjoint_union(complete_graph(3), complete_graph(4)))


# ---------------------------------------------------------------------------
# canonical form and enumeration
# ---------------------------------------------------------------------------

def test_canonical_form_is_isomorphism_invariant():
    # relabel P6 and a random tree; canonical forms must agree
    rng = random.Random(3)
    for base in enumerate_trees(7):
        perm = list(range(base.vertex_count))
        rng.shuffle(perm)
        relabeled = Graph.from_edges(
            base.vertex_count, [(perm[u], perm[v]) for u, v in base.edges]
        )
        assert canonical_form(relabeled) == canonical_form(base)


def test_canonical_form_rejects_non_trees(k3):
    with pytest.raises(ValueError):
        canonical_form(k3)
    with pytest.raises(ValueError):
        canonical_form(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_tree_counts_match_known_sequence():
    # number of free trees on n vertices (OEIS A000055)
    for n, expect in [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)]:
        assert len(enumerate_trees(n)) == expect


def test_enumeration_matches_networkx_generator():
    # independent oracle: the WROM free-tree generator
    ours = enumerate_trees(8)
    theirs = [nx.Graph(list(t.edges())) for t in nx.nonisomorphic_trees(8)]
    assert len(ours) == len(theirs) == 23
    matched = set()
    for mine in ours:
        g1 = nx.Graph(list(mine.edges))
        hits = [
            j
            for j, g2 in enumerate(theirs)
            if j not in matched and nx.is_isomorphic(g1, g2)
        ]
        assert len(hits) == 1
        matched.add(hits[0])
    assert len(matched) == 23


def _prufer_to_edges(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def test_enumeration_complete_against_prufer_brute_force():
    # every labeled tree on 7 vertices (7^5 Prufer sequences) must land in
    # exactly one of the enumerated isomorphism classes
    reps = [nx.Graph(list(t.edges)) for t in enumerate_trees(7)]
    by_degseq = {}
    for i, g in enumerate(reps):
        by_degseq.setdefault(tuple(sorted(d for _, d in g.degree())), []).append(i)
    seen = set()
    for seq in itertools.product(range(7), repeat=5):
        edges = _prufer_to_edges(seq, 7)
        degs = [0] * 7
        for u, v in edges:
            degs[u] += 1
            degs[v] += 1
        key = tuple(sorted(degs))
        candidates = by_degseq.get(key, [])
        g = nx.Graph(edges)
        hits = [i for i in candidates if nx.is_isomorphic(g, reps[i])]
        assert len(hits) == 1, f"Prufer tree matched {len(hits)} classes"
        seen.add(hits[0])
    assert seen == set(range(11))


def test_octane_skeletons():
    sk = enumerate_octane_skeletons()
    assert len(sk) == 18
    assert len({s.canonical for s in sk}) == 18
    names = [s.name for s in sk]
    assert len(set(names)) == 18
    assert "n-octane" in names and "2,2,3,3-tetramethylbutane" in names
    for s in sk:
        g = s.graph
        assert g.vertex_count == 8 and g.edge_count == 7
        assert is_connected(g)
        assert max(g.degrees) <= 4
        assert canonical_form(g) == s.canonical
    # deterministic canonical order
    assert [s.canonical for s in sk] == sorted(s.canonical for s in sk)


def test_octane_round_trip_preserves_canonical_form():
    for s in enumerate_octane_skeletons():
        again = parse_graph(to_edge_list_text(s.graph))
        assert canonical_form(again) == s.canonical


def test_named_structures_cover_exactly_the_enumerated_trees():
    # n-octane is the path: its canonical form equals P8's
    sk = {s.name: s for s in enumerate_octane_skeletons()}
    assert sk["n-octane"].canonical == canonical_form(path_graph(8))
    # 2,2,3,3-tetramethylbutane is the unique double-degree-4 tree
    degs = sorted(sk["2,2,3,3-tetramethylbutane"].graph.degrees, reverse=True)
    assert degs == [4, 4, 1, 1, 1, 1, 1, 1]


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def test_family_shapes():
    assert path_graph(5).edge_count == 4
    assert cycle_graph(6).degrees == (2,) * 6
    assert star_graph(4).degrees == (4, 1, 1, 1, 1)
    assert complete_graph(5).edge_count == 10
    assert complete_bipartite(2, 3).edge_count == 6


def test_random_graphs_are_connected_and_reproducible():
    a = random_connected_graphs(30, seed=42)
    b = random_connected_graphs(30, seed=42)
    assert [g.graph.edges for g in a] == [g.graph.edges for g in b]
    for named in a:
        assert is_connected(named.graph)
        assert 4 <= named.graph.vertex_count <= 12


def test_default_corpus_names_unique():
    corpus = default_corpus()
    names = [n.name for n in corpus]
    assert len(names) == len(set(names))
    assert len(corpus) >= 70
