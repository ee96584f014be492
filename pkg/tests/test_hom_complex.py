import itertools

import pytest

from homkit.dataset import atlas_graphs
from homkit.errors import (CellCapExceeded, InvalidCellError, NotIndependentError,
                           UnknownVertexError)
from homkit.graph import (Graph, delete_vertices, empty_graph, maximal_independent_sets,
                          path_graph)
from homkit.hom_complex import (CellComplex, MultiHom, build_delta_I, build_hom, cell_dim,
                                codim1_faces, intersect_delta, proper_faces, restrict_iso)


def test_census_examples(k1, k2, k3):
    assert build_hom(k1, 3).census() == [3, 3, 1]
    assert len(build_hom(k2, 3)) == 12
    assert build_hom(k2, 3).census() == [6, 6]
    assert build_hom(k3, 3).census() == [6]
    assert build_hom(k3, 2).is_empty
    assert build_hom(k3, 2).dimension == -1
    assert build_hom(k3, 2).census() == []


def test_star_counts():
    star = Graph.from_edges(['c', 'x', 'y', 'z'], [(0, 1), (0, 2), (0, 3)])
    assert len(build_hom(star, 2)) == 2
    assert len(build_hom(star, 3)) == 84


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_edge_cell_count(k2, n):
    expected = 0
    for a in range(1, 1 << n):
        rest = ((1 << n) - 1) & ~a
        expected += (1 << rest.bit_count()) - 1
    assert len(build_hom(k2, n)) == expected


def test_zero_colors():
    assert build_hom(empty_graph(0), 0).cells == frozenset({()})
    assert build_hom(empty_graph(1), 0).is_empty


def test_cell_cap(k2):
    with pytest.raises(CellCapExceeded) as info:
        build_hom(k2, 3, cell_cap=5)
    assert info.value.exit_code == 2
    assert len(build_hom(k2, 3, cell_cap=12)) == 12


def test_cell_dim():
    assert cell_dim((0b101, 0b010)) == 1
    assert cell_dim((0b1,)) == 0
    assert cell_dim((0b111,)) == 2


def test_multihom_validation(k2):
    eta = MultiHom.from_colors(k2, 3, {'u': [1, 3], 'v': [2]})
    assert eta.assignment == (0b101, 0b010)
    assert eta.dim == 1
    assert eta.to_dict() == {'u': [1, 3], 'v': [2]}
    with pytest.raises(InvalidCellError):
        MultiHom.from_colors(k2, 3, {'u': [1], 'v': [1]})
    with pytest.raises(InvalidCellError):
        MultiHom.from_colors(k2, 3, {'u': [1]})
    with pytest.raises(InvalidCellError):
        MultiHom.from_colors(k2, 2, {'u': [1], 'v': [3]})
    with pytest.raises(UnknownVertexError):
        MultiHom.from_colors(k2, 3, {'w': [1]})


def test_codim1_faces_signs():
    assert codim1_faces((0b101, 0b010)) == [((0b100, 0b010), 1), ((0b001, 0b010), -1)]
    assert codim1_faces((0b11,)) == [((0b10,), 1), ((0b01,), -1)]
    # u -> {1, 2}, v -> {3}, w -> {4, 5}
    assert codim1_faces((0b00011, 0b00100, 0b11000)) == [
        ((0b00010, 0b00100, 0b11000), 1),
        ((0b00001, 0b00100, 0b11000), -1),
        ((0b00011, 0b00100, 0b10000), -1),
        ((0b00011, 0b00100, 0b01000), 1),
    ]
    with pytest.raises(InvalidCellError):
        codim1_faces((0b1, 0b10))


def test_proper_faces():
    assert sorted(proper_faces((0b11,))) == [(0b01,), (0b10,)]
    assert len(list(proper_faces((0b111, 0b11000)))) == 7 * 3 - 1


def test_face_closure():
    for g in atlas_graphs(4):
        for n in range(1, 4):
            c = build_hom(g, n)
            assert c.is_face_closed()
            for i in maximal_independent_sets(g):
                assert build_delta_I(g, n, i).is_face_closed()


def test_euler_characteristic(k2):
    assert build_hom(k2, 3).euler_characteristic() == 0
    assert build_hom(empty_graph(1), 3).euler_characteristic() == 1


def test_delta_I_example(k2):
    delta = build_delta_I(k2, 3, k2.mask_of('u'))
    assert len(delta) == 7
    assert delta.census() == [4, 3]
    assert all(not cell[1] & 0b100 for cell in delta.cells)


def test_delta_I_edge_cases(k2, k1, p3):
    assert build_delta_I(k2, 3, 0).cells == build_hom(k2, 2).cells
    assert build_delta_I(k2, 3, 0).forget_top_color() == build_hom(k2, 2)
    assert build_delta_I(k1, 2, k1.full_mask) == build_hom(k1, 2)
    with pytest.raises(NotIndependentError):
        build_delta_I(p3, 3, p3.mask_of('ab'))
    with pytest.raises(InvalidCellError):
        build_delta_I(p3, 0, 0)


def test_forget_top_color_rejects_used_color(k1):
    with pytest.raises(InvalidCellError):
        build_hom(k1, 2).forget_top_color()


def test_intersect_delta(k2, p3):
    u = k2.mask_of('u')
    assert intersect_delta(k2, 3, [u]) == build_delta_I(k2, 3, u)
    both = intersect_delta(p3, 3, [p3.mask_of('ac'), p3.mask_of('b')])
    assert both.cells == build_hom(p3, 2).cells
    with pytest.raises(ValueError):
        intersect_delta(k2, 3, [])


def test_intersect_delta_matches_literal_intersection():
    for g in atlas_graphs(4):
        sets = maximal_independent_sets(g)
        for n in range(1, 4):
            for r in (2, 3):
                for family in itertools.combinations(sets, r):
                    # the check raises on any difference
                    intersect_delta(g, n, list(family))


def test_members_cover_hom():
    for g in atlas_graphs(4):
        for n in range(1, 4):
            whole = build_hom(g, n)
            union = frozenset().union(*(build_delta_I(g, n, i).cells
                                        for i in maximal_independent_sets(g)))
            assert union == whole.cells


def test_restrict_iso(k2):
    delta = build_delta_I(k2, 3, k2.mask_of('u'))
    pp = CellComplex(k2, 3, frozenset(c for c in delta.cells if c[0] == 0b100))
    restriction = restrict_iso(pp, k2.mask_of('u'), 0)
    assert len(restriction.complex) == 3
    assert restriction.complex.graph.labels == ('v',)
    sub = delete_vertices(k2, k2.mask_of('u'))
    assert restriction.complex.forget_top_color() == build_hom(sub, 2)
    assert restriction.bijection[(0b100, 0b011)] == (0b011,)


def test_restrict_iso_identity(k2):
    c = build_hom(k2, 2)
    restriction = restrict_iso(c, 0)
    assert restriction.complex == c
    assert all(old == new for old, new in restriction.bijection.items())


def test_restrict_iso_to_empty_graph(k1):
    restriction = restrict_iso(CellComplex(k1, 2, frozenset({(0b10,)})), k1.full_mask)
    assert restriction.complex.cells == frozenset({()})
    assert restriction.complex.graph == empty_graph(0)


def test_restrict_iso_rejects(k2):
    with pytest.raises(InvalidCellError):
        restrict_iso(build_hom(k2, 3), k2.mask_of('u'))


def test_path_cells_use_disjoint_colors():
    g = path_graph(3)
    for cell in build_hom(g, 3):
        assert not cell[0] & cell[1]
        assert not cell[1] & cell[2]
        assert all(cell)
