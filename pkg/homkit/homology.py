"""Integral cellular homology of Hom complexes.

Boundary matrices are scipy sparse integer matrices. Invariant factors are exact:
unit pivots are eliminated first on a dict-of-rows copy with Python integers, and
whatever block is left goes to sympy's Smith normal form over ZZ.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from homkit.errors import CellCapExceeded, ChainComplexError
from homkit.hom_complex import CellComplex, cell_dim, cell_key, codim1_faces, proper_faces

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_MAX_CELLS = 3000


@dataclass
class ChainComplex:
    """``bases[k]`` orders the k-cells; ``boundaries[k]`` maps k-chains to (k-1)-chains."""

    bases: List[List[Hashable]]
    boundaries: List[sparse.csc_matrix] = field(repr=False)

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def ranks(self) -> List[int]:
        return [len(basis) for basis in self.bases]

    def check_boundaries(self) -> None:
        for k in range(1, self.top):
            product = self.boundaries[k] @ self.boundaries[k + 1]
            if product.count_nonzero():
                raise ChainComplexError(
                    f'boundary of boundary is nonzero in dimension {k + 1} '
                    f'({product.count_nonzero()} entries)')


def _assemble(bases: List[List[Hashable]],
              boundary_of: Callable[[Hashable], Sequence[Tuple[Hashable, int]]]) -> ChainComplex:
    boundaries = [sparse.csc_matrix((0, len(bases[0]) if bases else 0), dtype=np.int64)]
    for k in range(1, len(bases)):
        index = {face: i for i, face in enumerate(bases[k - 1])}
        data, rows, cols = [], [], []
        for j, chain in enumerate(bases[k]):
            for face, sign in boundary_of(chain):
                data.append(sign)
                rows.append(index[face])
                cols.append(j)
        matrix = sparse.coo_matrix((data, (rows, cols)),
                                   shape=(len(bases[k - 1]), len(bases[k])), dtype=np.int64)
        boundaries.append(matrix.tocsc())
    return ChainComplex(bases, boundaries)


def chain_complex(c: CellComplex) -> ChainComplex:
    return _assemble(c.by_dimension(), codim1_faces)


# --------------------------------------------------------------------------- #
# Smith normal form

@dataclass(frozen=True)
class SmithNormalForm:
    factors: Tuple[int, ...]
    rank: int


def _sparse_rows(m) -> Tuple[Dict[int, Dict[int, int]], Dict[int, set]]:
    if sparse.issparse(m):
        coo = sparse.coo_matrix(m)
        entries = zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist())
    else:
        arr = np.asarray(m, dtype=object)
        entries = ((i, j, arr[i, j]) for i in range(arr.shape[0]) for j in range(arr.shape[1])) \
            if arr.ndim == 2 else ()
    rows: Dict[int, Dict[int, int]] = {}
    for i, j, a in entries:
        row = rows.setdefault(i, {})
        row[j] = row.get(j, 0) + int(a)
    cols: Dict[int, set] = {}
    for i in list(rows):
        row = {j: a for j, a in rows[i].items() if a}
        if not row:
            del rows[i]
            continue
        rows[i] = row
        for j in row:
            cols.setdefault(j, set()).add(i)
    return rows, cols


def _pivot(rows, cols, r, c):
    row = rows.pop(r)
    unit = row[c]
    for j in row:
        cols[j].discard(r)
    for s in sorted(cols[c]):
        target = rows[s]
        factor = target[c] * unit
        for j, a in row.items():
            value = target.get(j, 0) - factor * a
            if value:
                if j not in target:
                    cols[j].add(s)
                target[j] = value
            elif j in target:
                del target[j]
                cols[j].discard(s)
        if not target:
            del rows[s]
    del cols[c]


def _eliminate_unit_pivots(rows, cols) -> int:
    # each unit pivot splits off a factor 1; column c is cleared by row operations
    # and the column operations that would clear row r touch nothing else
    units = 0
    progress = True
    while progress:
        progress = False
        for r in sorted(rows, key=lambda r: (len(rows[r]), r)):
            row = rows.get(r)
            if row is None:
                continue
            pivots = [c for c, a in row.items() if a in (1, -1)]
            if not pivots:
                continue
            _pivot(rows, cols, r, min(pivots, key=lambda c: (len(cols[c]), c)))
            units += 1
            progress = True
    return units


def divisibility_chain(diagonal: Sequence[int]) -> List[int]:
    """Rewrite a diagonal of positive integers into ``d_1 | d_2 | ...`` form."""
    d = sorted(diagonal)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_normal_form(m) -> SmithNormalForm:
    """Nonzero invariant factors and rank of an integer matrix, exactly."""
    rows, cols = _sparse_rows(m)
    units = _eliminate_unit_pivots(rows, cols)
    residual = []
    if rows:
        row_ids = sorted(rows)
        col_ids = sorted({j for row in rows.values() for j in row})
        dense = [[ZZ(rows[i].get(j, 0)) for j in col_ids] for i in row_ids]
        logger.debug('smith normal form: %d unit pivots, residual %dx%d',
                     units, len(row_ids), len(col_ids))
        dm = DomainMatrix(dense, (len(row_ids), len(col_ids)), ZZ)
        residual = [abs(int(d)) for d in invariant_factors(dm) if d]
    factors = [1] * units + divisibility_chain(residual)
    return SmithNormalForm(tuple(factors), len(factors))


# --------------------------------------------------------------------------- #
# homology

def _group(betti: int, torsion: Sequence[int]) -> str:
    terms = []
    if betti == 1:
        terms.append('Z')
    elif betti > 1:
        terms.append(f'Z^{betti}')
    terms.extend(f'Z/{d}' for d in torsion)
    return ' + '.join(terms) or '0'


@dataclass(frozen=True)
class HomologyReport:
    """Reduced homology, trimmed after the last nonzero group.

    ``betti[k]`` and ``torsion[k]`` describe H̃_k; dimensions past the end are 0,
    so two reports are equal exactly when the homology agrees.
    """

    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]
    empty: bool = False
    reduced: bool = True

    @classmethod
    def build(cls, betti: Sequence[int], torsion: Sequence[Sequence[int]], empty: bool = False):
        betti, torsion = list(betti), [tuple(t) for t in torsion]
        while betti and not betti[-1] and not torsion[-1]:
            betti.pop()
            torsion.pop()
        return cls(tuple(betti), tuple(torsion), empty)

    def vanishes(self, k: int) -> bool:
        return k >= len(self.betti) or (not self.betti[k] and not self.torsion[k])

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def to_dict(self) -> dict:
        return {
            'empty': self.empty,
            'reduced': self.reduced,
            'betti': list(self.betti),
            'torsion': [list(t) for t in self.torsion],
        }

    def describe(self) -> str:
        if self.empty:
            return 'empty complex'
        parts = []
        for k in range(max(len(self.betti), 1)):
            b = self.betti[k] if k < len(self.betti) else 0
            t = self.torsion[k] if k < len(self.torsion) else ()
            if k == 0:
                parts.append(f'dim 0: {_group(b + 1, t)} (reduced: {_group(b, t)})')
            else:
                parts.append(f'dim {k}: {_group(b, t)}')
        return ', '.join(parts)


def reduced_homology(cc: ChainComplex) -> HomologyReport:
    cc.check_boundaries()
    if not cc.bases or not cc.bases[0]:
        return HomologyReport.build((), (), empty=True)
    snf = [SmithNormalForm((1,), 1)]  # augmentation C_0 -> Z
    snf += [smith_normal_form(cc.boundaries[k]) for k in range(1, cc.top + 1)]
    betti, torsion = [], []
    for k, basis in enumerate(cc.bases):
        image = snf[k + 1] if k < cc.top else SmithNormalForm((), 0)
        betti.append(len(basis) - snf[k].rank - image.rank)
        torsion.append(tuple(f for f in image.factors if f > 1))
    return HomologyReport.build(betti, torsion)


def homology(c: CellComplex) -> HomologyReport:
    return reduced_homology(chain_complex(c))


@dataclass(frozen=True)
class ConnectivityVerdict:
    """Homological connectivity.

    ``level`` is -2 for the empty complex, -1 when H̃_0 is nonzero and otherwise the
    largest k with H̃_i = 0 for all i <= k. ``None`` means every reduced group
    vanishes, which no finite level bounds. Only homology is certified.
    """

    level: Optional[int]
    certified: str = 'homological'

    def at_least(self, m: int) -> bool:
        return self.level is None or self.level >= m

    def describe(self) -> str:
        return 'inf' if self.level is None else str(self.level)

    def to_dict(self) -> dict:
        return {'level': self.level, 'certified': self.certified}


def homological_connectivity(r: HomologyReport, nonempty: Optional[bool] = None) -> ConnectivityVerdict:
    if nonempty is None:
        nonempty = not r.empty
    if not nonempty:
        return ConnectivityVerdict(-2)
    for k in range(len(r.betti)):
        if not r.vanishes(k):
            return ConnectivityVerdict(k - 1)
    return ConnectivityVerdict(None)


# --------------------------------------------------------------------------- #
# order complex oracle

def order_complex(c: CellComplex) -> ChainComplex:
    """Simplicial chains of the order complex of the face poset of ``c``."""
    ordered = sorted(c.cells, key=lambda cell: (cell_dim(cell), cell_key(cell)))
    rank = {cell: i for i, cell in enumerate(ordered)}
    ending_at: Dict[tuple, List[Tuple[int, ...]]] = {}
    simplices: List[List[Tuple[int, ...]]] = []
    for cell in ordered:
        top = rank[cell]
        chains = [(top,)]
        for face in proper_faces(cell):
            chains.extend(chain + (top,) for chain in ending_at[face])
        ending_at[cell] = chains
        for chain in chains:
            while len(simplices) < len(chain):
                simplices.append([])
            simplices[len(chain) - 1].append(chain)
    bases = [sorted(level) for level in simplices]

    def boundary_of(chain):
        return [(chain[:i] + chain[i + 1:], -1 if i % 2 else 1) for i in range(len(chain))]

    return _assemble(bases, boundary_of)


def order_complex_oracle(c: CellComplex, max_cells: int = DEFAULT_ORACLE_MAX_CELLS) -> HomologyReport:
    if len(c) > max_cells:
        raise CellCapExceeded(max_cells, c.graph.vertex_count, c.n)
    return reduced_homology(order_complex(c))
