"""Finite simple graphs on at most a few dozen vertices.

Vertices are the integers ``0..V-1`` in a fixed total order; every vertex carries a
string label. Adjacency is one bit row per vertex, and a vertex set is a plain
``int`` bitmask over the vertices of its carrier graph. All downstream
enumeration orders and boundary signs derive from this vertex order.
"""
import enum
import string
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from homkit.errors import GraphFormatError, UnknownVertexError

VertexSet = int

FORMATS = ('edge-list', 'graph6')


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_tuple(mask: int) -> Tuple[int, ...]:
    return tuple(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    labels: Tuple[str, ...]
    adjacency: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise GraphFormatError('one adjacency row per label expected')
        if len(set(self.labels)) != len(self.labels):
            raise GraphFormatError(f'duplicate vertex labels in {self.labels}')
        full = self.full_mask
        for v, row in enumerate(self.adjacency):
            if row & ~full:
                raise GraphFormatError(f'vertex {v} adjacent to a vertex out of range')
            if row >> v & 1:
                raise GraphFormatError(f'loop at vertex {self.labels[v]}')
            for w in iter_bits(row):
                if not self.adjacency[w] >> v & 1:
                    raise GraphFormatError(f'adjacency not symmetric at {v}, {w}')

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[Tuple[int, int]]) -> 'Graph':
        rows = [0] * len(labels)
        for u, v in edges:
            if not (0 <= u < len(labels) and 0 <= v < len(labels)):
                raise GraphFormatError(f'edge {u} {v} out of range for {len(labels)} vertices')
            if u == v:
                raise GraphFormatError(f'loop at vertex {u}')
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(str(label) for label in labels), tuple(rows))

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> VertexSet:
        return (1 << len(self.labels)) - 1

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count)
                for v in iter_bits(self.adjacency[u]) if u < v]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownVertexError(f'unknown vertex {label!r}') from None

    def mask_of(self, labels: Iterable[str]) -> VertexSet:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def labels_of(self, mask: VertexSet) -> List[str]:
        self.check_mask(mask)
        return [self.labels[v] for v in iter_bits(mask)]

    def check_mask(self, mask: VertexSet) -> None:
        if mask < 0 or mask & ~self.full_mask:
            raise UnknownVertexError(
                f'vertex set {bin(mask)} not inside a graph on {self.vertex_count} vertices')

    def resolve(self, token: str) -> int:
        """Label lookup with a fallback to 0-based indices."""
        if token in self.labels:
            return self.labels.index(token)
        if token.isdigit() and int(token) < self.vertex_count:
            return int(token)
        raise UnknownVertexError(f'unknown vertex {token!r}')

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    def __str__(self):
        edges = ' '.join(f'{self.labels[u]}-{self.labels[v]}' for u, v in self.edges())
        return f'Graph({self.vertex_count} vertices: {edges or "no edges"})'


def default_labels(count: int) -> Tuple[str, ...]:
    return tuple(str(v) for v in range(count))


def letter_labels(count: int) -> Tuple[str, ...]:
    if count > len(string.ascii_lowercase):
        return default_labels(count)
    return tuple(string.ascii_lowercase[:count])


def from_networkx(g: nx.Graph) -> Graph:
    if g.is_directed() or g.is_multigraph():
        raise GraphFormatError('only simple undirected graphs are supported')
    if nx.number_of_selfloops(g):
        raise GraphFormatError('loops are not allowed')
    nodes = list(g.nodes)
    position = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges([str(node) for node in nodes],
                            [(position[u], position[v]) for u, v in g.edges])


# --------------------------------------------------------------------------- #
# named families

def empty_graph(m: int, labels: Optional[Sequence[str]] = None) -> Graph:
    return Graph.from_edges(labels or default_labels(m), [])


def complete_graph(m: int, labels: Optional[Sequence[str]] = None) -> Graph:
    return Graph.from_edges(labels or default_labels(m),
                            [(u, v) for u in range(m) for v in range(u + 1, m)])


def path_graph(m: int, labels: Optional[Sequence[str]] = None) -> Graph:
    return Graph.from_edges(labels or default_labels(m), [(v, v + 1) for v in range(m - 1)])


def cycle_graph(m: int, labels: Optional[Sequence[str]] = None) -> Graph:
    if m < 3:
        raise GraphFormatError('a cycle needs at least 3 vertices')
    return Graph.from_edges(labels or default_labels(m), [(v, (v + 1) % m) for v in range(m)])


# --------------------------------------------------------------------------- #
# codecs

def _parse_edge_list(text: str) -> Graph:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith('#')]
    if not lines:
        raise GraphFormatError('missing vertex count header')
    header = lines[0].split()
    try:
        count = int(header[0])
    except ValueError:
        raise GraphFormatError(f'malformed header {lines[0]!r}') from None
    if count < 0:
        raise GraphFormatError(f'negative vertex count {count}')
    labels = header[1:] or list(default_labels(count))
    if len(labels) != count:
        raise GraphFormatError(f'header declares {count} vertices but names {len(labels)}')

    edges = set()
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f'malformed edge line {line!r}')
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f'malformed edge line {line!r}') from None
        if not (0 <= u < count and 0 <= v < count):
            raise GraphFormatError(f'vertex index out of range in {line!r}')
        if u == v:
            raise GraphFormatError(f'loop at vertex {u}')
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(labels, sorted(edges))


def _parse_graph6_line(line: str) -> Graph:
    try:
        g = nx.from_graph6_bytes(line.encode('ascii'))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphFormatError(f'malformed graph6 {line!r}: {e}') from None
    return from_networkx(g)


def parse_graphs(text: str) -> List[Graph]:
    """Every graph of a graph6 stream, one per non-empty line."""
    return [_parse_graph6_line(line.strip()) for line in text.splitlines() if line.strip()]


def parse_graph(text: str, fmt: str = 'edge-list') -> Graph:
    if fmt == 'edge-list':
        return _parse_edge_list(text)
    if fmt == 'graph6':
        graphs = parse_graphs(text)
        if len(graphs) != 1:
            raise GraphFormatError(f'expected exactly one graph6 line, got {len(graphs)}')
        return graphs[0]
    raise GraphFormatError(f'unknown graph format {fmt!r}')


def serialize_graph(g: Graph, fmt: str = 'edge-list') -> str:
    if fmt == 'edge-list':
        header = [str(g.vertex_count)]
        if g.labels != default_labels(g.vertex_count):
            header.extend(g.labels)
        lines = [' '.join(header)] + [f'{u} {v}' for u, v in g.edges()]
        return '\n'.join(lines) + '\n'
    if fmt == 'graph6':
        return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip() + '\n'
    raise GraphFormatError(f'unknown graph format {fmt!r}')


# --------------------------------------------------------------------------- #
# operations

def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.vertex_count)), default=0)


def induced_subgraph(g: Graph, keep: VertexSet) -> Graph:
    g.check_mask(keep)
    kept = bit_tuple(keep)
    position = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for w in iter_bits(g.adjacency[v] & keep):
            row |= 1 << position[w]
        rows.append(row)
    return Graph(tuple(g.labels[v] for v in kept), tuple(rows))


def delete_vertices(g: Graph, removed: VertexSet) -> Graph:
    g.check_mask(removed)
    return induced_subgraph(g, g.full_mask & ~removed)


def transfer_mask(src: Graph, dst: Graph, mask: VertexSet) -> VertexSet:
    """Re-express a vertex set of ``src`` over ``dst`` by matching labels."""
    return dst.mask_of(src.labels_of(mask))


class IndependenceStatus(str, enum.Enum):
    NOT_INDEPENDENT = 'not-independent'
    INDEPENDENT = 'independent'
    MAXIMAL = 'maximal-independent'


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.adjacency[v] & s for v in iter_bits(s))


def is_maximal_within(g: Graph, s: VertexSet, within: VertexSet) -> bool:
    """``s`` is maximal independent in the subgraph induced on ``within`` (``s ⊆ within``)."""
    if s & ~within or not is_independent(g, s):
        return False
    return all(g.adjacency[w] & s for w in iter_bits(within & ~s))


def independence_status(g: Graph, s: VertexSet) -> IndependenceStatus:
    g.check_mask(s)
    if not is_independent(g, s):
        return IndependenceStatus.NOT_INDEPENDENT
    if is_maximal_within(g, s, g.full_mask):
        return IndependenceStatus.MAXIMAL
    return IndependenceStatus.INDEPENDENT


def _bron_kerbosch(complement, r, p, x, out):
    if not p and not x:
        out.append(r)
        return
    # pivot on the vertex leaving the fewest branches
    u = max(iter_bits(p | x), key=lambda w: (p & complement[w]).bit_count())
    for v in iter_bits(p & ~complement[u]):
        _bron_kerbosch(complement, r | 1 << v, p & complement[v], x & complement[v], out)
        p &= ~(1 << v)
        x |= 1 << v


def maximal_independent_sets(g: Graph, within: Optional[VertexSet] = None) -> List[VertexSet]:
    """All maximal independent sets of ``g`` (or of its subgraph induced on ``within``).

    Maximal independent sets are the maximal cliques of the complement, found with
    pivoting Bron-Kerbosch over bit rows. The result is sorted lexicographically by
    vertex order; the empty vertex set yields ``[0]``.
    """
    if within is None:
        within = g.full_mask
    g.check_mask(within)
    complement = [within & ~g.adjacency[v] & ~(1 << v) for v in range(g.vertex_count)]
    out: List[int] = []
    _bron_kerbosch(complement, 0, within, 0, out)
    return sorted(out, key=bit_tuple)


def _colorable(g: Graph, order: Sequence[int], k: int) -> bool:
    colors = {}

    def assign(i, used):
        if i == len(order):
            return True
        v = order[i]
        forbidden = {colors[w] for w in iter_bits(g.adjacency[v]) if w in colors}
        # a fresh color is interchangeable with any other fresh one
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            del colors[v]
        return False

    return assign(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.vertex_count == 0:
        return 0
    order = sorted(range(g.vertex_count), key=lambda v: -g.degree(v))
    lower = 2 if g.edges() else 1
    for k in range(lower, g.vertex_count + 1):
        if _colorable(g, order, k):
            return k
    return g.vertex_count
