"""Collapsing Δ_I onto the subcomplex where the top color sits alone on I - I'.

For one vertex ``v`` of ``I - I'`` every cell η with ``n ∉ η(v)`` is paired with
η* (η plus ``n`` at ``v``). Pairs are removed so that larger cells go first, and
each removal is checked to be an elementary collapse: η must be a free face of η*
in what is left. Several vertices are handled one after another in vertex order.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Set, Tuple

from homkit.errors import FreeFaceViolation, InvalidCellError, NotIndependentError
from homkit.graph import Graph, VertexSet, bit_tuple, is_independent
from homkit.hom_complex import (DEFAULT_CELL_CAP, Cell, CellComplex, Restriction,
                                assignment_to_dict, build_delta_I, cell_key, cell_size,
                                restrict_iso)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CollapseStep:
    free_cell: Cell
    cofree_cell: Cell
    vertex: int


@dataclass(frozen=True)
class CollapseTrace:
    steps: Tuple[CollapseStep, ...]
    start: CellComplex = field(repr=False)
    end: CellComplex = field(repr=False)

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> List[dict]:
        g = self.start.graph
        return [{
            'removed_pair': [assignment_to_dict(g, step.free_cell),
                             assignment_to_dict(g, step.cofree_cell)],
            'vertex': g.labels[step.vertex],
        } for step in self.steps]


def lemma4_ordering(cells: Sequence[Cell], v: int, n: int) -> List[Cell]:
    """Order cells so that a cell never comes after one of its faces.

    Decreasing total size is a linear extension of reverse containment; ties go
    to the lexicographic order of assignments.
    """
    top = 1 << (n - 1)
    for cell in cells:
        if cell[v] & top:
            raise InvalidCellError(f'cell {cell_key(cell)} already uses color {n} at vertex {v}')
    return sorted(cells, key=lambda cell: (-cell_size(cell), cell_key(cell)))


def _cofaces(g: Graph, n: int, cell: Cell, remaining: Set[Cell]) -> List[Cell]:
    """Codimension-one cofaces of ``cell`` still present."""
    out = []
    palette = (1 << n) - 1
    for w, mask in enumerate(cell):
        blocked = mask
        for u in bit_tuple(g.adjacency[w]):
            blocked |= cell[u]
        free = palette & ~blocked
        while free:
            low = free & -free
            coface = cell[:w] + (mask | low,) + cell[w + 1:]
            if coface in remaining:
                out.append(coface)
            free ^= low
    return out


def lemma4_collapse(g: Graph, n: int, i: VertexSet, i_prime: VertexSet = 0,
                    cell_cap: int = DEFAULT_CELL_CAP) -> CollapseTrace:
    """Collapse Δ_i onto Δ'' = {η ∈ Δ_i | η(v) = {n} for v ∈ i - i_prime}.

    Every step is verified online; a face that is not free raises
    ``FreeFaceViolation`` carrying the step index and the second coface.
    """
    g.check_mask(i)
    g.check_mask(i_prime)
    if not is_independent(g, i):
        raise NotIndependentError(f'{g.labels_of(i)} is not independent')
    if i_prime & ~i:
        raise InvalidCellError(f"{g.labels_of(i_prime)} is not contained in {g.labels_of(i)}")

    start = build_delta_I(g, n, i, cell_cap)
    top = 1 << (n - 1)
    remaining = set(start.cells)
    steps: List[CollapseStep] = []
    for v in bit_tuple(i & ~i_prime):
        candidates = [cell for cell in remaining if not cell[v] & top]
        for cell in lemma4_ordering(candidates, v, n):
            star = cell[:v] + (cell[v] | top,) + cell[v + 1:]
            cofaces = _cofaces(g, n, cell, remaining)
            if star not in remaining or cofaces != [star]:
                second = next((c for c in cofaces if c != star), None)
                raise FreeFaceViolation(len(steps), assignment_to_dict(g, cell),
                                        assignment_to_dict(g, second) if second else None)
            remaining.discard(cell)
            remaining.discard(star)
            steps.append(CollapseStep(cell, star, v))
        logger.debug('vertex %s collapsed, %d cells left', g.labels[v], len(remaining))

    for cell in remaining:
        for v in bit_tuple(i & ~i_prime):
            if cell[v] != top:
                raise FreeFaceViolation(len(steps), assignment_to_dict(g, cell), None)
    end = CellComplex(g, n, frozenset(remaining))
    return CollapseTrace(tuple(steps), start, end)


def collapse_to_restriction(trace: CollapseTrace, i: VertexSet, i_prime: VertexSet = 0,
                            cell_cap: int = DEFAULT_CELL_CAP) -> Restriction:
    """Δ' of the collapse: Δ'' with the vertices of ``i - i_prime`` dropped."""
    return restrict_iso(trace.end, i & ~i_prime, i_prime, cell_cap)


def collapse_target(g: Graph, n: int, i: VertexSet, i_prime: VertexSet = 0,
                    cell_cap: int = DEFAULT_CELL_CAP) -> CellComplex:
    """Hom(g - (i - i_prime), K_{n-1}) when ``i_prime`` is empty; otherwise Δ' over n colors."""
    trace = lemma4_collapse(g, n, i, i_prime, cell_cap)
    restricted = collapse_to_restriction(trace, i, i_prime, cell_cap).complex
    return restricted.forget_top_color() if not i_prime else restricted
