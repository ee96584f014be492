"""Coverings of a graph and the invariant chi-dot.

A covering is an ordered partition ``I_1, ..., I_k`` of the vertex set into
independent sets such that every ``I_i`` is maximal independent in the subgraph
induced on ``I_i ∪ ... ∪ I_k``. ``chi_dot(g)`` is the largest ``k`` over all
coverings of ``g``.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from homkit.errors import (GraphTooLargeError, InvalidCoveringError,
                           NotIndependentError, UnknownVertexError)
from homkit.graph import (Graph, IndependenceStatus, VertexSet, delete_vertices,
                          independence_status, is_independent, is_maximal_within,
                          iter_bits, maximal_independent_sets, transfer_mask)

logger = logging.getLogger(__name__)

MAX_VERTICES = 16


@dataclass(frozen=True)
class Covering:
    carrier: Graph
    sets: Tuple[VertexSet, ...]

    def __len__(self):
        return len(self.sets)

    def labelled(self) -> List[List[str]]:
        return [self.carrier.labels_of(s) for s in self.sets]

    def __str__(self):
        return ''.join('[' + ' '.join(labels) + ']' for labels in self.labelled())


@dataclass(frozen=True)
class ChiDotResult:
    value: int
    witness: Covering


def is_covering(g: Graph, sets: Sequence[VertexSet]) -> bool:
    for s in sets:
        g.check_mask(s)
    union = 0
    for s in sets:
        if s & union:
            return False
        if not s and g.vertex_count:
            return False
        union |= s
    if union != g.full_mask:
        return False
    remaining = g.full_mask
    for s in sets:
        if not is_maximal_within(g, s, remaining):
            return False
        remaining &= ~s
    return True


def _check_covering(cov: Covering) -> None:
    if not is_covering(cov.carrier, cov.sets):
        raise InvalidCoveringError(f'{cov} is not a covering of {cov.carrier}')


def chi_dot(g: Graph, max_vertices: int = MAX_VERTICES) -> ChiDotResult:
    """Exact chi-dot by the recursion ``1 + max over maximal independent I of chi_dot(g - I)``.

    The memo is keyed by the bitmask of the remaining vertices. Among maximizing
    branches the lexicographically smallest ``I`` wins.
    """
    if g.vertex_count > max_vertices:
        raise GraphTooLargeError(
            f'chi_dot is exhaustive; {g.vertex_count} vertices exceed the limit {max_vertices}')
    memo: Dict[int, Tuple[int, int]] = {0: (0, 0)}

    def best(remaining):
        if remaining in memo:
            return memo[remaining][0]
        top, choice = -1, 0
        for i in maximal_independent_sets(g, within=remaining):
            value = best(remaining & ~i)
            if value > top:
                top, choice = value, i
        memo[remaining] = (top + 1, choice)
        return top + 1

    value = best(g.full_mask)
    sets = []
    remaining = g.full_mask
    while remaining:
        choice = memo[remaining][1]
        sets.append(choice)
        remaining &= ~choice
    logger.debug('chi_dot of %s is %d after %d memo entries', g, value, len(memo))
    return ChiDotResult(value, Covering(g, tuple(sets)))


def all_coverings(g: Graph) -> Iterator[Tuple[VertexSet, ...]]:
    """Every covering of ``g``, by brute force over vertex subsets.

    Works straight from the definition without the maximal independent set
    enumerator, so it can serve as an oracle for ``chi_dot``.
    """
    def extend(remaining, prefix):
        if not remaining:
            yield prefix
            return
        sub = remaining
        while sub:
            if is_maximal_within(g, sub, remaining):
                yield from extend(remaining & ~sub, prefix + (sub,))
            sub = (sub - 1) & remaining

    yield from extend(g.full_mask, ())


def partition_to_covering(g: Graph, parts: Sequence[VertexSet]) -> Covering:
    union = 0
    for p in parts:
        g.check_mask(p)
        if p & union:
            raise InvalidCoveringError('parts are not pairwise disjoint')
        if not is_independent(g, p):
            raise NotIndependentError(f'part {g.labels_of(p)} is not independent')
        union |= p
    if union != g.full_mask:
        raise InvalidCoveringError('parts do not cover every vertex')

    remaining = g.full_mask
    sets = []
    for p in parts:
        current = p & remaining
        if not current:
            continue
        for w in iter_bits(remaining & ~current):
            if not g.adjacency[w] & current:
                current |= 1 << w
        sets.append(current)
        remaining &= ~current
    cov = Covering(g, tuple(sets))
    _check_covering(cov)
    return cov


def lemma2_extend(g: Graph, v: int, cov: Covering) -> Covering:
    """Extend a covering of ``g - v`` to a covering of ``g`` without losing a set.

    ``v`` joins the first set holding none of its neighbours. When every set holds
    one, ``{v}`` goes in front if ``v`` sees every other vertex and at the end otherwise;
    in front it would not be maximal.
    """
    if not 0 <= v < g.vertex_count:
        raise UnknownVertexError(f'vertex {v} not in {g}')
    _check_covering(cov)
    if set(cov.carrier.labels) != set(g.labels) - {g.labels[v]}:
        raise InvalidCoveringError(f'{cov} is not a covering of {g} without {g.labels[v]}')
    sets = [transfer_mask(cov.carrier, g, s) for s in cov.sets]
    for j, s in enumerate(sets):
        if not g.adjacency[v] & s:
            sets[j] = s | 1 << v
            break
    else:
        if g.adjacency[v] == g.full_mask & ~(1 << v):
            sets.insert(0, 1 << v)
        else:
            sets.append(1 << v)
    out = Covering(g, tuple(sets))
    _check_covering(out)
    return out


def lemma3_prepend(g: Graph, i: VertexSet, cov: Covering) -> Covering:
    if independence_status(g, i) is not IndependenceStatus.MAXIMAL:
        raise NotIndependentError(f'{g.labels_of(i)} is not maximal independent in {g}')
    _check_covering(cov)
    rest = delete_vertices(g, i)
    if set(cov.carrier.labels) != set(rest.labels):
        raise InvalidCoveringError(f'{cov} is not a covering of {rest}')
    out = Covering(g, (i,) + tuple(transfer_mask(cov.carrier, g, s) for s in cov.sets))
    _check_covering(out)
    return out


def covering_from_labels(g: Graph, sets: Sequence[Sequence[str]]) -> Covering:
    return Covering(g, tuple(g.mask_of(labels) for labels in sets))
