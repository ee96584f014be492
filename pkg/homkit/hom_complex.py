"""Hom(G, K_n) as a regular cell complex of multihomomorphisms.

A cell assigns every vertex a nonempty color set, adjacent vertices get disjoint
sets, and faces are pointwise subsets. Cells are stored as tuples of per-vertex
color bitmasks (bit ``x - 1`` stands for color ``x``), which keeps membership and
face tests to integer operations. The face poset is never stored.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from homkit.errors import (CellCapExceeded, DecompositionError, InvalidCellError,
                           NotIndependentError)
from homkit.graph import (Graph, VertexSet, bit_tuple, delete_vertices, is_independent,
                          iter_bits, transfer_mask)

logger = logging.getLogger(__name__)

Cell = Tuple[int, ...]

DEFAULT_CELL_CAP = 200000


def colors(mask: int) -> Tuple[int, ...]:
    return tuple(b + 1 for b in iter_bits(mask))


def color_mask(color_list: Iterable[int]) -> int:
    mask = 0
    for x in color_list:
        mask |= 1 << (x - 1)
    return mask


def cell_key(cell: Cell) -> Tuple[Tuple[int, ...], ...]:
    """Sort key: lexicographic on assignments under vertex and color order."""
    return tuple(colors(m) for m in cell)


def cell_dim(cell: Cell) -> int:
    return sum(m.bit_count() - 1 for m in cell)


def cell_size(cell: Cell) -> int:
    return sum(m.bit_count() for m in cell)


def is_face(face: Cell, cell: Cell) -> bool:
    return all(not f & ~c for f, c in zip(face, cell))


def codim1_faces(cell: Cell) -> List[Tuple[Cell, int]]:
    """Faces of codimension one with their incidence signs.

    Deleting color ``x`` from ``η(v)`` carries sign ``(-1)^(offset(v) + pos(x))``
    where ``offset(v)`` sums ``|η(w)| - 1`` over earlier vertices and ``pos(x)`` is
    the 0-based rank of ``x`` in ``η(v)``.
    """
    if cell_dim(cell) == 0:
        raise InvalidCellError('a 0-cell has no codimension-one faces')
    faces = []
    offset = 0
    for v, mask in enumerate(cell):
        size = mask.bit_count()
        if size >= 2:
            for pos, b in enumerate(iter_bits(mask)):
                face = cell[:v] + (mask & ~(1 << b),) + cell[v + 1:]
                faces.append((face, -1 if (offset + pos) % 2 else 1))
        offset += size - 1
    return faces


def proper_faces(cell: Cell) -> Iterator[Cell]:
    """Every face of ``cell`` other than itself."""
    choices = []
    for mask in cell:
        subs = []
        sub = mask
        while sub:
            subs.append(sub)
            sub = (sub - 1) & mask
        choices.append(subs)
    for face in itertools.product(*choices):
        if face != cell:
            yield face


@dataclass(frozen=True)
class MultiHom:
    carrier: Graph
    n_colors: int
    assignment: Cell

    def __post_init__(self):
        g = self.carrier
        if len(self.assignment) != g.vertex_count:
            raise InvalidCellError('one color set per vertex expected')
        palette = (1 << self.n_colors) - 1
        for v, mask in enumerate(self.assignment):
            if not mask:
                raise InvalidCellError(f'empty color set at {g.labels[v]}')
            if mask & ~palette:
                raise InvalidCellError(f'color beyond {self.n_colors} at {g.labels[v]}')
        for u, v in g.edges():
            if self.assignment[u] & self.assignment[v]:
                raise InvalidCellError(
                    f'adjacent {g.labels[u]} and {g.labels[v]} share a color')

    @classmethod
    def from_colors(cls, g: Graph, n: int, assignment: Dict[str, Sequence[int]]) -> 'MultiHom':
        cell = [0] * g.vertex_count
        for label, color_list in assignment.items():
            cell[g.index(label)] = color_mask(color_list)
        return cls(g, n, tuple(cell))

    @property
    def dim(self) -> int:
        return cell_dim(self.assignment)

    def to_dict(self) -> Dict[str, List[int]]:
        return assignment_to_dict(self.carrier, self.assignment)


def assignment_to_dict(g: Graph, cell: Cell) -> Dict[str, List[int]]:
    return {label: list(colors(mask)) for label, mask in zip(g.labels, cell)}


@dataclass(frozen=True)
class CellComplex:
    graph: Graph
    n: int
    cells: FrozenSet[Cell] = field(repr=False)

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.cells

    def __iter__(self):
        return iter(self.sorted_cells())

    @property
    def is_empty(self) -> bool:
        return not self.cells

    @property
    def dimension(self) -> int:
        return max((cell_dim(c) for c in self.cells), default=-1)

    def sorted_cells(self) -> List[Cell]:
        return sorted(self.cells, key=cell_key)

    def by_dimension(self) -> List[List[Cell]]:
        graded: List[List[Cell]] = [[] for _ in range(self.dimension + 1)]
        for cell in self.sorted_cells():
            graded[cell_dim(cell)].append(cell)
        return graded

    def census(self) -> List[int]:
        return [len(cells) for cells in self.by_dimension()]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * count for k, count in enumerate(self.census()))

    def is_face_closed(self) -> bool:
        return all(face in self.cells
                   for cell in self.cells if cell_dim(cell)
                   for face, _ in codim1_faces(cell))

    def forget_top_color(self) -> 'CellComplex':
        """The same cells read as a complex over ``n - 1`` colors."""
        top = 1 << (self.n - 1)
        if any(m & top for cell in self.cells for m in cell):
            raise InvalidCellError(f'color {self.n} is still in use')
        return CellComplex(self.graph, self.n - 1, self.cells)

    def to_dicts(self) -> List[Dict[str, List[int]]]:
        return [assignment_to_dict(self.graph, cell) for cell in self.sorted_cells()]

    def __str__(self):
        return f'CellComplex(n={self.n}, {self.graph}, census={self.census()})'


def _enumerate_cells(g: Graph, n: int, top_allowed: VertexSet, cell_cap: int) -> FrozenSet[Cell]:
    if n < 0:
        raise InvalidCellError(f'number of colors must be nonnegative, got {n}')
    palette = (1 << n) - 1
    top = 1 << (n - 1) if n else 0
    count = g.vertex_count
    masks = [0] * count
    cells = []

    def place(v):
        if v == count:
            cells.append(tuple(masks))
            if len(cells) > cell_cap:
                raise CellCapExceeded(cell_cap, count, n)
            return
        allowed = palette
        for w in iter_bits(g.adjacency[v] & ((1 << v) - 1)):
            allowed &= ~masks[w]
        if not top_allowed >> v & 1:
            allowed &= ~top
        sub = allowed
        while sub:
            masks[v] = sub
            place(v + 1)
            sub = (sub - 1) & allowed
        masks[v] = 0

    place(0)
    return frozenset(cells)


def build_hom(g: Graph, n: int, cell_cap: int = DEFAULT_CELL_CAP) -> CellComplex:
    """Hom(g, K_n). ``n = 0`` is accepted: empty unless ``g`` has no vertices."""
    cells = _enumerate_cells(g, n, g.full_mask, cell_cap)
    logger.debug('Hom(%s, K_%d) has %d cells', g, n, len(cells))
    return CellComplex(g, n, cells)


def build_delta_I(g: Graph, n: int, i: VertexSet, cell_cap: int = DEFAULT_CELL_CAP) -> CellComplex:
    """Cells of Hom(g, K_n) where color ``n`` shows up only at vertices of ``i``."""
    g.check_mask(i)
    if not is_independent(g, i):
        raise NotIndependentError(f'{g.labels_of(i)} is not independent')
    if n < 1:
        raise InvalidCellError('the distinguished color needs n >= 1')
    return CellComplex(g, n, _enumerate_cells(g, n, i, cell_cap))


def intersect_delta(g: Graph, n: int, family: Sequence[VertexSet],
                    cell_cap: int = DEFAULT_CELL_CAP, check: bool = True) -> CellComplex:
    """The intersection of the Δ_I over ``family``, built as Δ at the intersection of the sets.

    With ``check`` the result is compared cell by cell against the literal
    intersection of the individual Δ_I.
    """
    if not family:
        raise ValueError('intersect_delta needs a nonempty family')
    common = g.full_mask
    for i in family:
        common &= i
    out = build_delta_I(g, n, common, cell_cap)
    if check:
        literal = None
        for i in family:
            cells = build_delta_I(g, n, i, cell_cap).cells
            literal = cells if literal is None else literal & cells
        if literal != out.cells:
            raise DecompositionError(
                f'intersection over {[g.labels_of(i) for i in family]} differs from '
                f'Δ at {g.labels_of(common)}')
    return out


@dataclass(frozen=True)
class Restriction:
    complex: CellComplex
    bijection: Dict[Cell, Cell] = field(repr=False)


def restrict_iso(delta_pp: CellComplex, v_removed: VertexSet,
                 i_prime: Optional[VertexSet] = None,
                 cell_cap: int = DEFAULT_CELL_CAP) -> Restriction:
    """Drop the vertices of ``v_removed``, all of which carry exactly the top color.

    Returns the complex on ``g - v_removed`` and the face-poset isomorphism
    ``old cell -> new cell``; incidences and their signs are checked to match.
    When ``i_prime`` is given the result must equal
    ``{η ∈ Hom(g - v_removed, K_n) | n ∈ η(w) ⇒ w ∈ i_prime}``.
    """
    g, n = delta_pp.graph, delta_pp.n
    g.check_mask(v_removed)
    top = 1 << (n - 1)
    removed = bit_tuple(v_removed)
    for cell in delta_pp.cells:
        for v in removed:
            if cell[v] != top:
                raise InvalidCellError(
                    f'{assignment_to_dict(g, cell)} does not color {g.labels[v]} with {{{n}}} alone')

    kept = bit_tuple(g.full_mask & ~v_removed)
    sub = delete_vertices(g, v_removed)
    bijection = {cell: tuple(cell[v] for v in kept) for cell in delta_pp.cells}
    for cell, image in bijection.items():
        if cell_dim(cell) and {(bijection[f], s) for f, s in codim1_faces(cell)} != set(codim1_faces(image)):
            raise DecompositionError(f'restriction breaks the incidences of {cell}')
    restricted = CellComplex(sub, n, frozenset(bijection.values()))

    if i_prime is not None:
        if i_prime & v_removed:
            raise InvalidCellError('i_prime must avoid the removed vertices')
        target = build_delta_I(sub, n, transfer_mask(g, sub, i_prime), cell_cap)
        if target.cells != restricted.cells:
            raise DecompositionError(f'restriction of {delta_pp} does not match {target}')
    return Restriction(restricted, bijection)
