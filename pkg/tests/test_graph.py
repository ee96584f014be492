import itertools

import networkx as nx
import pytest

from homkit.dataset import atlas_graphs, named_graph
from homkit.errors import GraphFormatError, UnknownVertexError
from homkit.graph import (IndependenceStatus, bit_tuple, chromatic_number, complete_graph,
                          cycle_graph, empty_graph, independence_status, induced_subgraph,
                          max_degree, maximal_independent_sets, parse_graph, parse_graphs,
                          path_graph, serialize_graph, transfer_mask)


def test_parse_edge_list():
    assert parse_graph('3\n0 1\n1 2') == path_graph(3)
    assert parse_graph('2\n0 1') == complete_graph(2)


def test_parse_edge_list_labels_and_comments():
    g = parse_graph('# a path\n3 a b c\n\n0 1\n# middle\n1 2\n')
    assert g.labels == ('a', 'b', 'c')
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_edge_list_deduplicates():
    assert parse_graph('2\n0 1\n1 0\n0 1') == complete_graph(2)


@pytest.mark.parametrize('text', [
    '',
    'three\n0 1',
    '2\n0 0',
    '2\n0 2',
    '2\n0 -1',
    '2\n0 1 1',
    '3 a b\n0 1',
    '2 a a\n0 1',
])
def test_parse_edge_list_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_graph6():
    g = parse_graph('D~{', 'graph6')
    assert g == complete_graph(5)
    assert serialize_graph(g, 'graph6') == 'D~{\n'


def test_parse_graph6_rejects():
    with pytest.raises(GraphFormatError):
        parse_graph('D~{\nA_', 'graph6')
    with pytest.raises(GraphFormatError):
        parse_graph('D~', 'graph6')


def test_parse_graphs_stream():
    graphs = parse_graphs('A_\nBw\n\n')
    assert graphs == [complete_graph(2), complete_graph(3)]


@pytest.mark.parametrize('fmt', ['edge-list', 'graph6'])
def test_round_trip_small_graphs(fmt):
    for g in atlas_graphs(6):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g


def test_round_trip_keeps_labels():
    g = path_graph(4, ['w', 'x', 'y', 'z'])
    assert serialize_graph(g).splitlines()[0] == '4 w x y z'
    assert parse_graph(serialize_graph(g)) == g


def test_max_degree():
    assert max_degree(complete_graph(3)) == 2
    assert max_degree(empty_graph(3)) == 0
    assert max_degree(path_graph(3)) == 2
    assert max_degree(empty_graph(0)) == 0


def test_induced_subgraph(p3, k3):
    assert induced_subgraph(p3, p3.mask_of('ac')) == empty_graph(2, ['a', 'c'])
    assert induced_subgraph(k3, k3.mask_of(['2', '3'])) == complete_graph(2, ['2', '3'])
    assert induced_subgraph(p3, p3.full_mask) == p3
    with pytest.raises(UnknownVertexError):
        induced_subgraph(p3, 0b1000)


def test_induced_subgraph_composes():
    for g in atlas_graphs(5):
        for a in range(g.full_mask + 1):
            sub = induced_subgraph(g, a)
            b = a
            while True:
                assert induced_subgraph(sub, transfer_mask(g, sub, b)) == induced_subgraph(g, b)
                if not b:
                    break
                b = (b - 1) & a


def test_independence_status(p3, k2):
    assert independence_status(p3, p3.mask_of('ac')) is IndependenceStatus.MAXIMAL
    assert independence_status(p3, p3.mask_of('a')) is IndependenceStatus.INDEPENDENT
    assert independence_status(k2, k2.full_mask) is IndependenceStatus.NOT_INDEPENDENT
    assert independence_status(p3, 0) is IndependenceStatus.INDEPENDENT
    assert independence_status(empty_graph(0), 0) is IndependenceStatus.MAXIMAL
    with pytest.raises(UnknownVertexError):
        independence_status(p3, 0b1000)


def test_maximal_independent_sets(p3, k3):
    assert maximal_independent_sets(p3) == [p3.mask_of('ac'), p3.mask_of('b')]
    assert maximal_independent_sets(k3) == [0b001, 0b010, 0b100]
    assert maximal_independent_sets(empty_graph(2)) == [0b11]
    assert maximal_independent_sets(empty_graph(0)) == [0]


def test_maximal_independent_sets_match_brute_force():
    for g in atlas_graphs(6):
        brute = [s for s in range(g.full_mask + 1)
                 if independence_status(g, s) is IndependenceStatus.MAXIMAL]
        assert maximal_independent_sets(g) == sorted(brute, key=bit_tuple)


def test_maximal_independent_sets_match_complement_cliques():
    for g in atlas_graphs(6, min_vertices=1):
        cliques = {frozenset(c) for c in nx.find_cliques(nx.complement(g.to_networkx()))}
        assert {frozenset(bit_tuple(s)) for s in maximal_independent_sets(g)} == cliques


def test_maximal_independent_sets_within(c5):
    within = c5.mask_of(['2', '4', '5'])
    assert maximal_independent_sets(c5, within) == [c5.mask_of(['2', '4']), c5.mask_of(['2', '5'])]


def test_chromatic_number():
    assert chromatic_number(complete_graph(3)) == 3
    assert chromatic_number(empty_graph(4)) == 1
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(cycle_graph(6)) == 2
    assert chromatic_number(empty_graph(0)) == 0


def _brute_chromatic(g):
    for k in range(g.vertex_count + 1):
        for coloring in itertools.product(range(k), repeat=g.vertex_count):
            if all(coloring[u] != coloring[v] for u, v in g.edges()):
                return k
    return g.vertex_count


def test_chromatic_number_matches_brute_force():
    for g in atlas_graphs(5):
        assert chromatic_number(g) == _brute_chromatic(g)


def test_named_graph():
    assert named_graph('K3') == complete_graph(3)
    assert named_graph('P4') == path_graph(4)
    assert named_graph('C5', letters=True) == cycle_graph(5, 'abcde')
    assert named_graph('E2') == empty_graph(2)
    assert named_graph('E0').vertex_count == 0
    for name in ['C2', 'X1', 'K', 'k3', 'K3 ']:
        with pytest.raises(GraphFormatError):
            named_graph(name)
