"""Corpora of small graphs for exhaustive sweeps."""
import itertools
import re
from typing import Iterator, List

import networkx as nx

from homkit.errors import GraphFormatError
from homkit.graph import (Graph, complete_graph, cycle_graph, empty_graph, from_networkx,
                          letter_labels, path_graph)

ATLAS_MAX_VERTICES = 7

GRAPH_NAME = re.compile(r'([KPCE])(\d+)')

FAMILIES = {
    'K': complete_graph,
    'P': path_graph,
    'C': cycle_graph,
    'E': empty_graph,
}


def atlas_graphs(max_vertices: int, min_vertices: int = 0, connected: bool = False) -> List[Graph]:
    """Every graph on ``min_vertices..max_vertices`` vertices, up to isomorphism."""
    if max_vertices > ATLAS_MAX_VERTICES:
        raise GraphFormatError(f'the graph atlas stops at {ATLAS_MAX_VERTICES} vertices')
    graphs = []
    for g in nx.graph_atlas_g():
        count = g.number_of_nodes()
        if not min_vertices <= count <= max_vertices:
            continue
        if connected and (count == 0 or not nx.is_connected(g)):
            continue
        graphs.append(from_networkx(g))
    return graphs


def labelled_graphs(vertex_count: int) -> Iterator[Graph]:
    """Every graph on the vertices ``0..vertex_count-1``, without identifying isomorphic ones."""
    pairs = list(itertools.combinations(range(vertex_count), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges([str(v) for v in range(vertex_count)],
                               [pair for k, pair in enumerate(pairs) if bits >> k & 1])


def named_graph(name: str, letters: bool = False) -> Graph:
    """``K3``, ``P4``, ``C5`` or ``E2`` (edgeless)."""
    match = GRAPH_NAME.fullmatch(name)
    if match is None:
        raise GraphFormatError(f'unknown graph name {name!r}')
    m = int(match.group(2))
    return FAMILIES[match.group(1)](m, letter_labels(m) if letters else None)
