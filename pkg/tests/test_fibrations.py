import pytest

from grosimp.category import chain_category, nerve, terminal_category
from grosimp.diagram import constant_diagram, mark_equivalences_diagram
from grosimp.errors import BudgetExceeded
from grosimp.fibrations import (cocartesian_edges, is_cocartesian_edge,
                                is_cocartesian_fibration, is_inner_fibration,
                                is_quasi_category)
from grosimp.grothendieck import marked_relative_nerve
from grosimp.marked import flat
from grosimp.simplicial import (constant_map, horn, invertible_interval,
                                standard_simplex)
from grosimp.util import Budget


def test_nerve_is_a_quasi_category(chain2):
    report = is_quasi_category(nerve(chain2, 3), n_max=3)
    assert report.ok
    assert report.problems_checked > 0


def test_horn_is_not_a_quasi_category():
    # the spine of Lambda^1[2] has no composite edge, so the inner horn
    # over the point cannot fill
    H = horn(2, 1, 3)
    pt = standard_simplex(0, 3)
    report = is_inner_fibration(constant_map(H, pt, (0,)), n_max=2)
    assert not report.ok
    assert report.defects


def test_identity_is_an_inner_fibration(seg):
    from grosimp.simplicial import SimplicialMap
    assert is_inner_fibration(SimplicialMap.identity(seg), n_max=3).ok


def test_relnerve_projection_is_cocartesian(marked_inclusion_diagram):
    marked_rel, rel = marked_relative_nerve(marked_inclusion_diagram)
    p = rel.projection
    assert is_inner_fibration(p, n_max=3).ok
    report = is_cocartesian_fibration(p, n_max=3)
    assert report.ok
    for e in marked_rel.marked:
        assert is_cocartesian_edge(p, e, n_max=3).ok


def test_nondegenerate_edge_over_a_point_is_not_cocartesian(seg):
    # collapsing an interval to a point: lifting problems whose leading
    # edge is the long edge have no filler at degree 2
    F0 = constant_diagram(terminal_category(), seg)
    marked_rel, rel = marked_relative_nerve(mark_equivalences_diagram(F0))
    p = rel.projection
    long_edges = [c for c in rel.space.simplices[1]
                  if dict(c[1])[(0, 1)] == (0, 1)]
    assert len(long_edges) == 1
    assert not is_cocartesian_edge(p, long_edges[0], n_max=2).ok


def test_cocartesian_edges_covers_every_edge(marked_inclusion_diagram):
    marked_rel, rel = marked_relative_nerve(marked_inclusion_diagram)
    reports = cocartesian_edges(rel.projection, n_max=2)
    assert set(reports) == set(rel.space.simplices[1])
    assert all(reports[e].ok for e in marked_rel.marked)


def test_fibration_checks_respect_budgets(chain2):
    N = nerve(chain2, 3)
    pt = standard_simplex(0, 3)
    with pytest.raises(BudgetExceeded):
        is_inner_fibration(constant_map(N, pt, (0,)), n_max=3, budget=Budget(5))


def test_marking_reported_only_on_success(marked_inclusion_diagram):
    marked_rel, rel = marked_relative_nerve(marked_inclusion_diagram)
    report = is_cocartesian_fibration(rel.projection, n_max=3)
    assert report.ok
    assert report.marking is not None
    # the diagram's marked edges all carry the lifting property
    assert set(marked_rel.marked) <= set(report.marking.marked)
