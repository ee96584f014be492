import pytest

from homkit.dataset import atlas_graphs
from homkit.errors import CellCapExceeded
from homkit.graph import chromatic_number, complete_graph, empty_graph
from homkit.homology import homological_connectivity, homology
from homkit.hom_complex import build_hom
from homkit.nerve import check_nerve_hypotheses, intersection_closure, nerve_cover, verify_theorem

# theorem sweeps skip complexes beyond this size; the theorem sweep script covers them
MAX_TEST_CELLS = 6000


def test_intersection_closure():
    assert intersection_closure([0b101, 0b010]) == [0]
    assert intersection_closure([0b0011, 0b0110, 0b1100]) == [0, 0b0010, 0b0100]
    assert intersection_closure([0b1]) == []


def test_nerve_cover_of_edge(k2):
    d = nerve_cover(k2, 3)
    assert [i for i, _ in d.family] == [0b01, 0b10]
    assert [len(piece) for _, piece in d.family] == [7, 7]
    assert list(d.intersections) == [0]
    assert len(d.intersections[0]) == 2
    assert len(d.whole) == 12


def test_nerve_cover_single_member(k1):
    d = nerve_cover(k1, 2)
    assert len(d.family) == 1
    assert d.family[0][1] == d.whole
    assert d.intersections == {}


def test_nerve_cover_of_empty_hom(k3):
    d = nerve_cover(k3, 2)
    assert d.whole.is_empty
    assert all(piece.is_empty for _, piece in d.family)
    assert list(d.intersections) == [0]


def test_nerve_hypotheses_on_edge(k2):
    check = check_nerve_hypotheses(nerve_cover(k2, 3), 0)
    assert check.satisfied
    kinds = [(piece.kind, piece.verdict.level, piece.required) for piece in check.pieces]
    assert kinds == [('member', None, 0), ('member', None, 0), ('intersection', -1, -1)]


def test_nerve_hypotheses_with_empty_intersection(k3):
    d = nerve_cover(k3, 3)
    assert not check_nerve_hypotheses(d, 0).satisfied
    # members are two points, the intersection Hom(K3, K2) is empty
    assert check_nerve_hypotheses(d, -1).satisfied


def test_nerve_hypotheses_single_member():
    g = empty_graph(2, ['a', 'b'])
    assert check_nerve_hypotheses(nerve_cover(g, 2), 5).satisfied


def test_nerve_check_to_dict(k2):
    out = check_nerve_hypotheses(nerve_cover(k2, 3), 0).to_dict(k2)
    assert out['m'] == 0
    assert out['satisfied'] is True
    assert out['pieces'][2] == {
        'kind': 'intersection',
        'vertices': [],
        'cells': 2,
        'homology': {'empty': False, 'reduced': True, 'betti': [1], 'torsion': [[]]},
        'verdict': {'level': -1, 'certified': 'homological'},
        'required': -1,
        'ok': True,
    }


def test_verify_edge(k2):
    report = verify_theorem(k2, 3)
    assert report.chi_dot == 2
    assert report.claimed_level == 0
    assert report.corollary_level == 0
    assert report.verdict.level == 0
    assert report.base_case == 'nerve'
    assert report.passed


def test_verify_triangle(k3):
    report = verify_theorem(k3, 3)
    assert report.claimed_level == -1
    assert report.verdict.level == -1
    assert report.base_case == 'tight'
    assert report.passed


@pytest.mark.parametrize('n', [1, 2, 3])
def test_verify_edgeless(n):
    report = verify_theorem(empty_graph(3), n)
    assert report.chi_dot == 1
    assert report.claimed_level == n - 2
    assert report.verdict.level is None
    assert report.base_case == 'edgeless'
    assert report.passed


def test_verify_vacuous(k3):
    report = verify_theorem(k3, 2)
    assert report.base_case == 'vacuous'
    assert report.verdict.level == -2
    assert report.passed


def test_verify_inductive_edge(k2):
    report = verify_theorem(k2, 3, depth='inductive')
    assert len(report.pieces) == 3
    assert all(piece.matches for piece in report.pieces)
    assert [piece.collapse_steps for piece in report.pieces] == [2, 2, 0]
    assert report.nerve_m == 0
    assert report.nerve_hypotheses_satisfied
    assert report.passed
    assert list(report.to_dict())[-1] == 'passed'


def test_verify_rejects_depth(k2):
    with pytest.raises(ValueError):
        verify_theorem(k2, 3, depth='deep')


def test_findings_dump_artifacts(k2, tmp_path, monkeypatch):
    import homkit.nerve
    from homkit.homology import ConnectivityVerdict

    monkeypatch.setattr(homkit.nerve, 'homological_connectivity',
                        lambda report, nonempty=None: ConnectivityVerdict(-2))
    report = verify_theorem(k2, 3, dump_dir=str(tmp_path))
    assert not report.passed
    assert report.findings[0].startswith('verdict-below-claim')
    dumped = list(tmp_path.iterdir())
    assert len(dumped) == 1
    assert (dumped[0] / 'cells.jsonl').exists()
    assert (dumped[0] / 'boundary_1.npz').exists()


@pytest.mark.parametrize('m', [1, 2, 3])
def test_complete_graphs(m):
    for n in range(m, 6):
        verdict = homological_connectivity(homology(build_hom(complete_graph(m), n)))
        assert verdict.at_least(n - m - 1)


@pytest.mark.slow
def test_theorem_on_connected_graphs():
    for g in atlas_graphs(4, min_vertices=1, connected=True):
        for n in range(chromatic_number(g), 6):
            try:
                report = verify_theorem(g, n, depth='inductive', cell_cap=MAX_TEST_CELLS)
            except CellCapExceeded:
                continue
            assert report.passed, report.findings
            assert report.verdict.at_least(report.corollary_level)
            assert report.corollary_level <= report.claimed_level
