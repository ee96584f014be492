import pytest

import homkit.collapse
from homkit.collapse import (collapse_target, collapse_to_restriction, lemma4_collapse,
                             lemma4_ordering)
from homkit.dataset import atlas_graphs
from homkit.errors import FreeFaceViolation, InvalidCellError, NotIndependentError
from homkit.graph import (bit_tuple, delete_vertices, empty_graph, maximal_independent_sets)
from homkit.hom_complex import build_delta_I, build_hom, cell_key, cell_size
from homkit.homology import homology

# instances larger than this are left to the collapse sweep
MAX_TEST_CELLS = 4000


def test_lemma4_ordering():
    assert lemma4_ordering([(0b001,), (0b011,)], 0, 3) == [(0b011,), (0b001,)]
    assert lemma4_ordering([(0b010, 0b001), (0b001, 0b010)], 0, 3) == [(0b001, 0b010), (0b010, 0b001)]
    with pytest.raises(InvalidCellError):
        lemma4_ordering([(0b10,)], 0, 2)


def test_collapse_edge(k2):
    trace = lemma4_collapse(k2, 3, k2.mask_of('u'))
    assert len(trace) == 2
    assert len(trace.start) == 7
    assert len(trace.end) == 3
    assert trace.steps[0].free_cell == (0b001, 0b010)
    assert trace.steps[0].cofree_cell == (0b101, 0b010)
    assert trace.steps[1].free_cell == (0b010, 0b001)
    assert trace.end.cells == frozenset({(0b100, 0b001), (0b100, 0b010), (0b100, 0b011)})

    restricted = collapse_to_restriction(trace, k2.mask_of('u')).complex
    sub = delete_vertices(k2, k2.mask_of('u'))
    assert restricted.forget_top_color() == build_hom(sub, 2)
    assert collapse_target(k2, 3, k2.mask_of('u')) == build_hom(sub, 2)


def test_collapse_trace_json(k2):
    trace = lemma4_collapse(k2, 3, k2.mask_of('u'))
    assert trace.to_json() == [
        {'removed_pair': [{'u': [1], 'v': [2]}, {'u': [1, 3], 'v': [2]}], 'vertex': 'u'},
        {'removed_pair': [{'u': [2], 'v': [1]}, {'u': [2, 3], 'v': [1]}], 'vertex': 'u'},
    ]


def test_collapse_single_vertex(k1):
    trace = lemma4_collapse(k1, 2, k1.full_mask)
    assert len(trace) == 1
    assert trace.steps[0].free_cell == (0b01,)
    assert trace.end.cells == frozenset({(0b10,)})
    assert collapse_target(k1, 2, k1.full_mask) == build_hom(empty_graph(0), 1)


def test_collapse_keeping_everything(k2):
    u = k2.mask_of('u')
    trace = lemma4_collapse(k2, 3, u, u)
    assert len(trace) == 0
    assert trace.end == trace.start


def test_collapse_rejects(p3, k2):
    with pytest.raises(NotIndependentError):
        lemma4_collapse(p3, 3, p3.mask_of('ab'))
    with pytest.raises(InvalidCellError):
        lemma4_collapse(k2, 3, k2.mask_of('u'), k2.mask_of('v'))


def test_wrong_order_is_caught(k1, monkeypatch):
    def smallest_first(cells, v, n):
        return sorted(cells, key=lambda cell: (cell_size(cell), cell_key(cell)))

    monkeypatch.setattr(homkit.collapse, 'lemma4_ordering', smallest_first)
    with pytest.raises(FreeFaceViolation) as info:
        lemma4_collapse(k1, 3, k1.full_mask)
    assert info.value.step == 0
    assert info.value.free_cell == {'a': [1]}
    assert info.value.exit_code == 3


def _subsets(mask):
    sub = mask
    while True:
        yield sub
        if not sub:
            break
        sub = (sub - 1) & mask


@pytest.mark.slow
def test_collapses_on_small_graphs():
    for g in atlas_graphs(4):
        for n in range(1, 5):
            for i in maximal_independent_sets(g):
                if len(build_delta_I(g, n, i)) > MAX_TEST_CELLS:
                    continue
                for i_prime in _subsets(i):
                    trace = lemma4_collapse(g, n, i, i_prime)
                    assert len(trace.start) - len(trace.end) == 2 * len(trace)
                    for v in bit_tuple(i & ~i_prime):
                        assert all(cell[v] == 1 << (n - 1) for cell in trace.end.cells)
                    # checks the result against Δ over i_prime on the smaller graph
                    collapse_to_restriction(trace, i, i_prime)
                    if not i_prime:
                        assert homology(trace.start) == homology(trace.end)
                        target = collapse_target(g, n, i)
                        assert target == build_hom(delete_vertices(g, i), n - 1)
                        assert homology(trace.start) == homology(target)
